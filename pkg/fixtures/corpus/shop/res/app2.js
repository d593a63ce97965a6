function fn058188(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn879846(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn549843(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn030354(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn587030(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn135459(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn881430(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn651355(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn412384(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn681002(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn366724(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn975710(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn205045(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn832878(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn588938(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn457879(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn523415(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn824602(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn679175(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn225242(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn247738(a,b){var c=a*45+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn612858(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn766575(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn626800(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn713797(a,b){var c=a*63+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn804856(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn818511(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn688572(a,b){var c=a*76+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn457661(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn949132(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn072584(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn398137(a,b){var c=a*75+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn301768(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn555778(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn901945(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn000369(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn548166(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn082441(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn566039(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn118115(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn078348(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn594606(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn987043(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn082157(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn490388(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn720610(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn279164(a,b){var c=a*35+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn835257(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn071068(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn988806(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn691118(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn113522(a,b){var c=a*42+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn697012(a,b){var c=a*75+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn679604(a,b){var c=a*2+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn506786(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn996039(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn542735(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn773308(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn599811(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn459931(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn151864(a,b){var c=a*61+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn475266(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn095775(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn204302(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn727240(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn800405(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn601567(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn553130(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn936513(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn018949(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn543842(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn482169(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn859024(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn677439(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn705701(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn515211(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn895258(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn641963(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn574399(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn613804(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn667372(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn170446(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn444862(a,b){var c=a*32+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn738203(a,b){var c=a*29+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn357557(a,b){var c=a*35+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn504662(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn539000(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn412948(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn524650(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn056893(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn356961(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn758189(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn745601(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn411479(a,b){var c=a*12+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn039882(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn332646(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn348504(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn508649(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn253225(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn455049(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn171674(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn574189(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn431316(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn006937(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn005255(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn168649(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn695118(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn879345(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn621723(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn672881(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn588719(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn510086(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn407872(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn502096(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn003197(a,b){var c=a*60+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn193805(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn254843(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn739260(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn641651(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn331508(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn361702(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn231193(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn474177(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn994513(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn355796(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn507198(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn093295(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn869776(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn155147(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn950724(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn009304(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn614870(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn456533(a,b){var c=a*64+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn666020(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn152332(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn947354(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn722086(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn989234(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn831273(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn811202(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn198938(a,b){var c=a*50+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn980660(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn191201(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn652197(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn926522(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn296669(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn474914(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn650145(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn257948(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn873476(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn708505(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn005474(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn185788(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn426932(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn136321(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn485380(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn357806(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn620386(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn567776(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn551571(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn630011(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn560657(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn055322(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn825949(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn110030(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn219344(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn667187(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn980385(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn568238(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn738885(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn310382(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn914562(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn758066(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn185916(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn628112(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn000460(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn888915(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn851759(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn917414(a,b){var c=a*12+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn904429(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn600458(a,b){var c=a*66+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn962706(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn041036(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn402759(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn509988(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn882987(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn240430(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn447324(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn257940(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn714094(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn013834(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn678268(a,b){var c=a*21+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn029636(a,b){var c=a*84+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn439517(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn438297(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn143188(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn686220(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn388890(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn171938(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn145600(a,b){var c=a*5+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn609102(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn726372(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn936759(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn886995(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn059706(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn398666(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn980715(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn586440(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn623421(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn635218(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn236974(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn963517(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn866483(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn160143(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn736390(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn438172(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn547757(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn593157(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn676463(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn250728(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn068912(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn042364(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn146710(a,b){var c=a*82+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn064456(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn134635(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn454380(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn958168(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn104765(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn865088(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn904416(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn177412(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn696651(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn856657(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn984755(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn084869(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn132205(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn905694(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn398161(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn773720(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn212410(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn099839(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn252805(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn087026(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn512476(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn870695(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn102631(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn811906(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn397382(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn814109(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn385210(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn228291(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn720614(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn457039(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn999155(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn389014(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn307399(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn592950(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn519965(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn627289(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn537880(a,b){var c=a*10+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn070493(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn416430(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn839991(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn397421(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn514677(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn486014(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn904615(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn979904(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn794421(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn257761(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn757619(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn554328(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn120634(a,b){var c=a*33+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn668502(a,b){var c=a*19+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn173913(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn568910(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn180168(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn442578(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn269695(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn571881(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn886883(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn390151(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn038444(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn484945(a,b){var c=a*67+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn951249(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn156913(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn000907(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn764171(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn938998(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn653041(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn171463(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn367007(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn441771(a,b){var c=a*27+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn244362(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn565512(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn571658(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn877675(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn402800(a,b){var c=a*29+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn387294(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn489301(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn464779(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn150039(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn079183(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn442501(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn372317(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn674840(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn266370(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn931451(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn000018(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn436063(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn116994(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn977322(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn948757(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn653138(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn221120(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn491757(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn698928(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn609065(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn396565(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn809015(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn006259(a,b){var c=a*26+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn548345(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn733423(a,b){var c=a*74+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn675412(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn637580(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn160652(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn115616(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn571276(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn585127(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn228513(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn550914(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn860063(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn844053(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn448625(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn540766(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn871443(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn626207(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn250770(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn373002(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn037300(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn244423(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn807096(a,b){var c=a*86+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn769069(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn163011(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn078613(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn586897(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn994769(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn627648(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn437165(a,b){var c=a*66+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn724813(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn971077(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn399264(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn394796(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn690698(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn016374(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn500200(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn420671(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn238457(a,b){var c=a*29+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn135076(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn386020(a,b){var c=a*2+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn325560(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn904611(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn800795(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn988503(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn641827(a,b){var c=a*46+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn605393(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn802557(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn170584(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn974788(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn282387(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn146086(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn408526(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn455736(a,b){var c=a*75+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn762492(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn861258(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn276432(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn467134(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn297873(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn302347(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn200487(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn328880(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn737389(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn831508(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn906050(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn745211(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn585948(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn606288(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn341232(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn198436(a,b){var c=a*59+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn730588(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn575735(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn187102(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn934557(a,b){var c=a*29+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn122102(a,b){var c=a*95+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn967576(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn324730(a,b){var c=a*44+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn818246(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn551955(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn825784(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn651260(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn959434(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn109532(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn857401(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn095148(a,b){var c=a*41+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn708730(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn851116(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn867615(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn031547(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn334094(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn228639(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn655637(a,b){var c=a*94+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn243405(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn583673(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn798950(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn785070(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn861821(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn980001(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn052105(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn613539(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn012113(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn245740(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn213383(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn927995(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn730832(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn485736(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn742186(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn104655(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn121022(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn708360(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn774807(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn502805(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn073209(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn935607(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn046823(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn641945(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn395301(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn985785(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn022407(a,b){var c=a*75+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn838114(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn568065(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn770161(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn835069(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn291112(a,b){var c=a*4+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn227589(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn471784(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn346069(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn335097(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn536218(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn842104(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn443908(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn835708(a,b){var c=a*39+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn692359(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn244923(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn226690(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn990629(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn380113(a,b){var c=a*79+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn094049(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn180527(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn684764(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn981370(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn781060(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn313282(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn220828(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn381052(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn233561(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn086865(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn434249(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn892004(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn772221(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn334456(a,b){var c=a*55+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn105678(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn417946(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn763217(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn996863(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn109380(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn269281(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn225382(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn794074(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn165464(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn729785(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn614583(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn689885(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn983564(a,b){var c=a*34+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn312301(a,b){var c=a*70+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn475875(a,b){var c=a*81+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn958250(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn611934(a,b){var c=a*50+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn115026(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn403247(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn448783(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn627157(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn317182(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn216469(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn594648(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn734692(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn903484(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn394821(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn224507(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn366222(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn287433(a,b){var c=a*59+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn646232(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn548358(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn192601(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn907536(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn580676(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn172702(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn361820(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn354999(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn391044(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn981511(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn669636(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn450659(a,b){var c=a*58+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn962413(a,b){var c=a*45+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn549253(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn075680(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn807809(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn463305(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn008423(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn747590(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn717515(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn263258(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn523862(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn600990(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn516077(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn102423(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn392049(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn599682(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn837531(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn644087(a,b){var c=a*58+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn067085(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn850052(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn627534(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn164083(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn938787(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn779531(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn333892(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn510133(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn805908(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn594673(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn254241(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn426509(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn081006(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn024291(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn309695(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn620224(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn725134(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn073696(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn479278(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn453219(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn326809(a,b){var c=a*87+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn035764(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn106876(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn541373(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn426955(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn639382(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn068172(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn552234(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn347342(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn627526(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn435778(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn844426(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn595143(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn702420(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn754796(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn046312(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn115651(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn730328(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn146970(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn795814(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn089824(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn010382(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn617976(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn995368(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn832874(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn512360(a,b){var c=a*74+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn444110(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn854832(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn438960(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn707531(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn058295(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn733619(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn470482(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn132050(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn805950(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn670792(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn769394(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn846469(a,b){var c=a*25+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn236122(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn339757(a,b){var c=a*10+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn052248(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn566990(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn188129(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn880285(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn681324(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn381801(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn009360(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn770077(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn536432(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn156011(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn035727(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn977035(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn077105(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn362864(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn573492(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn947456(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn589815(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn154204(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn103652(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn467149(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn047204(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn652313(a,b){var c=a*18+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn662307(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn382413(a,b){var c=a*37+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn213752(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn502552(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn365589(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn163905(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn092368(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn756551(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn443316(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn248655(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn336230(a,b){var c=a*32+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn886354(a,b){var c=a*43+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn742506(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn350005(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn827705(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn324205(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn533291(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn457328(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn445063(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn455299(a,b){var c=a*30+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn539778(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn839253(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn431271(a,b){var c=a*9+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn661560(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn965645(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn190454(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn297971(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn526699(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn575336(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn049957(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn118439(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn338568(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn896596(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn284374(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn089829(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn129868(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn268012(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn414086(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn235051(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn439375(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn052101(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn277680(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn933921(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn417793(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn449344(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn176419(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn572185(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn514237(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn757819(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn214731(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn376976(a,b){var c=a*52+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn281474(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn742840(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn935294(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn052516(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn668541(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn058840(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn435366(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn037798(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn072545(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn448953(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn151312(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn058345(a,b){var c=a*50+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn662651(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn092931(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn668340(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn942436(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn397498(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn530491(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn473585(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn887453(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn239659(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn451644(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn144126(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn539007(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn997599(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn507199(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn244532(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn384940(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn852379(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn552481(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn950401(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn259478(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn590120(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn702211(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn190808(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn404926(a,b){var c=a*69+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn655924(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn606310(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn277176(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn063815(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn694612(a,b){var c=a*40+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn884579(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn593781(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn522020(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn280757(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn593021(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn675559(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn809217(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn142780(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn008015(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn893605(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn992660(a,b){var c=a*23+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn547629(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn286770(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn391004(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn742775(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn796477(a,b){var c=a*42+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn985050(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn526915(a,b){var c=a*33+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn206631(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn595072(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn348766(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn519885(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn072763(a,b){var c=a*68+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn370254(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn776151(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn637157(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn441995(a,b){var c=a*34+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn644717(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn414464(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn782070(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn417367(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn825206(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn040726(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn452201(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn600247(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn791015(a,b){var c=a*74+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn872417(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn335849(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn756684(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn285946(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn069628(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn740575(a,b){var c=a*48+b;for(v