function fn303456(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn819646(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn772027(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn141316(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn344907(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn211580(a,b){var c=a*71+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn322057(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn787285(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn778388(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn769095(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn738216(a,b){var c=a*95+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn606326(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn322823(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn412422(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn934632(a,b){var c=a*23+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn419694(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn855443(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn725517(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn229953(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn875142(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn973200(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn040245(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn737525(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn892946(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn493350(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn796806(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn346947(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn307009(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn057535(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn110790(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn672794(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn711740(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn914282(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn575696(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn682132(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn358404(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn436657(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn245278(a,b){var c=a*64+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn808107(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn817652(a,b){var c=a*12+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn561180(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn287186(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn228907(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn119835(a,b){var c=a*25+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn826854(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn514170(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn983502(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn702846(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn281423(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn222483(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn040880(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn353547(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn551474(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn306418(a,b){var c=a*75+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn228856(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn056613(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn677941(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn017981(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn187923(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn442308(a,b){var c=a*3+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn903605(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn920700(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn289113(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn940492(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn200270(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn026394(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn487231(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn230993(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn068504(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn921724(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn443197(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn993530(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn236176(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn416017(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn545286(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn942325(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn932434(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn006750(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn750412(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn864633(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn866624(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn105714(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn191488(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn186079(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn742327(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn595054(a,b){var c=a*2+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn400795(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn705841(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn972932(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn031078(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn867033(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn658384(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn898685(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn205515(a,b){var c=a*20+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn359248(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn540692(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn110313(a,b){var c=a*57+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn544142(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn205124(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn501281(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn189917(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn520630(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn692107(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn024402(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn256166(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn740577(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn596815(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn463867(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn553710(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn263634(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn579582(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn077484(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn894059(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn527318(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn910257(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn693345(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn061406(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn444096(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn775258(a,b){var c=a*88+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn180397(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn309366(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn468245(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn546167(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn990635(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn552527(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn009713(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn371750(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn642779(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn437768(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn211760(a,b){var c=a*57+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn013699(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn803422(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn362432(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn299253(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn180275(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn229576(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn703986(a,b){var c=a*20+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn945565(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn500675(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn846952(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn707025(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn090147(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn795839(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn268367(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn113724(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn647549(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn139751(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn416782(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn672672(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn051427(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn867973(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn414482(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn237543(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn240694(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn840375(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn016251(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn056034(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn987858(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn618054(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn385096(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn619831(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn267628(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn827574(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn113713(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn136248(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn831327(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn758045(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn720068(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn539002(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn816607(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn283090(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn979356(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn728821(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn550864(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn867054(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn704810(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn967331(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn762421(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn288175(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn653383(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn587483(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn452314(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn156300(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn058852(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn010515(a,b){var c=a*48+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn806401(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn296225(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn134249(a,b){var c=a*41+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn459250(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn445677(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn451072(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn942884(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn499633(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn512089(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn140334(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn343331(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn343655(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn995635(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn938469(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn938408(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn682506(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn593337(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn478850(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn698395(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn456278(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn081953(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn787179(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn263503(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn265244(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn465864(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn813298(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn449373(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn651619(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn222265(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn704800(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn657347(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn989896(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn459081(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn251669(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn261688(a,b){var c=a*71+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn389646(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn114365(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn553530(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn545136(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn823553(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn510605(a,b){var c=a*63+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn600557(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn977482(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn015800(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn685255(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn064266(a,b){var c=a*50+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn206662(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn980287(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn058251(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn415185(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn954737(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn405361(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn784677(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn820872(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn319289(a,b){var c=a*44+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn048249(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn367309(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn618812(a,b){var c=a*12+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn611202(a,b){var c=a*57+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn796120(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn894599(a,b){var c=a*92+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn590922(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn937864(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn514980(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn978836(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn185502(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn152951(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn500748(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn603686(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn173211(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn839451(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn420660(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn387960(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn104487(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn454473(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn886466(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn726061(a,b){var c=a*55+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn723627(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn297826(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn423048(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn466228(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn575765(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn971106(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn696545(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn904674(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn751553(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn999512(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn806983(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn856301(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn454548(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn041868(a,b){var c=a*75+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn579700(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn918861(a,b){var c=a*34+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn779199(a,b){var c=a*70+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn133000(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn268251(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn544992(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn218202(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn491207(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn643433(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn065934(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn010906(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn088393(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn142415(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn395659(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn133475(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn513770(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn967118(a,b){var c=a*13+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn344566(a,b){var c=a*78+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn569569(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn918042(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn473788(a,b){var c=a*92+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn410696(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn767762(a,b){var c=a*30+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn214992(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn479680(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn747109(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn856555(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn361289(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn858879(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn807761(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn066605(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn155467(a,b){var c=a*19+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn496592(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn912715(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn981770(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn105750(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn050112(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn545117(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn887290(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn612718(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn288416(a,b){var c=a*29+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn145050(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn704648(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn783059(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn720033(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn688879(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn837911(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn499641(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn684164(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn291471(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn645353(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn802688(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn987391(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn919427(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn470759(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn265366(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn962000(a,b){var c=a*11+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn105412(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn669515(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn856665(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn986929(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn305001(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn392823(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn661819(a,b){var c=a*83+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn017973(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn485341(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn323769(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn435714(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn648426(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn274851(a,b){var c=a*28+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn793683(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn437770(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn980818(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn375827(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn403864(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn999867(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn955166(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn215858(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn412955(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn537064(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn578491(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn763923(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn927308(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn923508(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn934443(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn303565(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn031595(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn433867(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn113913(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn372914(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn626135(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn501655(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn365204(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn501055(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn611391(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn053140(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn584250(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn607409(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn535045(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn512235(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn932580(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn961735(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn366490(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn292570(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn359497(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn064836(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn033077(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn183792(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn178177(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn714595(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn601924(a,b){var c=a*40+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn132349(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn563670(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn027358(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn822339(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn972470(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn189750(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn470745(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn492816(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn513107(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn909404(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn244456(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn691118(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn660393(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn292374(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn466353(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn278522(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn274313(a,b){var c=a*51+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn997554(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn676555(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn077946(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn933350(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn505501(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn058022(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn625960(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn918063(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn319341(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn490920(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn054374(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn935827(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn478028(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn702343(a,b){var c=a*33+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn206330(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn989569(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn675873(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn975034(a,b){var c=a*44+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn676858(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn339069(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn695831(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn991020(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn797606(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn575226(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn312310(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn096209(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn234459(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn780017(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn548605(a,b){var c=a*59+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn228810(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn718334(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn913453(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn132994(a,b){var c=a*4+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn535483(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn768629(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn564763(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn230082(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn818455(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn315174(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn802297(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn520768(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn332722(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn117403(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn511653(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn775796(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn061697(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn599969(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn960498(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn399422(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn147288(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn940614(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn148796(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn743576(a,b){var c=a*67+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn104643(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn174695(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn014158(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn100546(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn059598(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn369084(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn844786(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn823503(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn147107(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn914479(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn822870(a,b){var c=a*52+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn876700(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn322879(a,b){var c=a*90+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn086678(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn707401(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn751558(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn083926(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn808718(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn445892(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn942547(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn460717(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn793535(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn546076(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn073763(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn978754(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn768543(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn673471(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn920506(a,b){var c=a*47+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn559849(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn361712(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn820461(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn354656(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn764280(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn579359(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn852786(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn523443(a,b){var c=a*72+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn828641(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn577400(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn650923(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn722287(a,b){var c=a*76+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn998307(a,b){var c=a*14+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn716252(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn604561(a,b){var c=a*78+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn427642(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn793696(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn200220(a,b){var c=a*66+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn148274(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn450550(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn848132(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn831574(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn822360(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn856973(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn337247(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn155108(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn389887(a,b){var c=a*95+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn550008(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn551079(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn285766(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn313666(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn291900(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn820321(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn137870(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn687394(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn246286(a,b){var c=a*19+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn034299(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn743129(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn180079(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn748027(a,b){var c=a*34+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn082052(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn783264(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn909723(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn226935(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn182763(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn541318(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn936116(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn041046(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn882392(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn516989(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn984466(a,b){var c=a*69+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn934703(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn801798(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn907116(a,b){var c=a*77+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn079083(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn200007(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn855882(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn156754(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn333321(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn231004(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn847004(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn801947(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn919138(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn152729(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn422740(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn443736(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn532834(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn180536(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn947037(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn938011(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn731456(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn598413(a,b){var c=a*88+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn895775(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn573273(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn370133(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn372849(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn957600(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn359986(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn964433(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn351929(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn448988(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn456819(a,b){var c=a*97+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn234865(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn146235(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn399178(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn286465(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn242563(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn143066(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn666376(a,b){var c=a*57+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn312161(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn605238(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn993915(a,b){var c=a*57+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn590709(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn463985(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn600896(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn096307(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn670053(a,b){var c=a*6+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn013248(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn326100(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn549887(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn158489(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn604238(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn764390(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn921127(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn166181(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn927429(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn318400(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn483674(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn669919(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn417528(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn029496(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn484993(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn983525(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn005078(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn604935(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn568547(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn205037(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn112701(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn624198(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn549470(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn500016(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn448556(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn325836(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn646884(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn540847(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn679080(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn349547(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn572273(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn510239(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn437370(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn325781(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn497851(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn799156(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn404221(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn896034(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn285722(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn614974(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn002604(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn735439(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn319762(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn363284(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn436346(a,b){var c=a*26+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn493004(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn769488(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn990797(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn475186(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn107341(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn246116(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn644169(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn854793(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn178508(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn791996(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn297810(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn394218(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn907062(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn137859(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn215433(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn976281(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn524392(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn776465(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn056764(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn230882(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn062736(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn425388(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn425675(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn070579(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn939041(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn110885(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn054113(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn619001(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn330696(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn640133(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn578903(a,b){var c=a*64+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn433047(a,b){var c=a*82+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn806569(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn607796(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn505274(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn106251(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn375762(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn336852(a,b){var c=a*92+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn612707(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn090411(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn706472(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn229255(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn384614(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn230346(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn309947(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn524509(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn747697(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn727183(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn998630(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn844817(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn053687(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn857725(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn743730(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn961161(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn644437(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn560410(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn765732(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn589718(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn947190(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn307284(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn513058(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn496885(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn406266(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn057420(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn376404(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn736335(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn195077(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn145982(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn259706(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn813319(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn245855(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn443668(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn884135(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn605755(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn085216(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn525845(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn424039(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn054309(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn366203(a,b){var c=a*50+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn586843(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn295259(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn578512(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn990394(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn177816(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn648971(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn031768(a,b){var c=a*63+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn987620(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn320974(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn967584(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn436948(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn420974(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn244756(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn544257(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn919124(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn870715(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn011928(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn372386(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn848503(a,b){var c=a*47+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn325617(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn081641(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn778891(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn249775(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn313591(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn505391(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn533312(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn422285(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn965015(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn047438(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn848126(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn493383(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn524123(a,b){var c=a*62+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn326733(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn307653(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn613604(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn259857(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn092250(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn625743(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn448720(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn765270(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn501541(a,b){var c=a*35+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn715142(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn245945(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn698396(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn717954(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn693297(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn000439(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn839760(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn527686(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn090034(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn849181(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn896561(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn335874(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn298599(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn327294(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn604277(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn458816(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn533845(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn564081(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn958444(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn619625(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn625424(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn152199(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn762969(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn600925(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn323189(a,b){var c=a*2+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn251419(a,b){var c=a*33+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn583615(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn272249(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn888469(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn751075(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn387868(a,b){var c=a*8+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn045857(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn706232(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn103630(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn499473(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn990942(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn936489(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn153164(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn321930(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn359111(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn693375(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn907451(a,b){var c=a*58+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn924805(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn143827(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn299688(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn582372(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn242059(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn859292(a,b){var c=a*72+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn609762(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn727013(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn641238(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn067051(a,b){var c=a*55+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn715490(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn120591(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn332390(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn582238(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn421655(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn603610(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn108724(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn872389(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn891453(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn449693(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn640096(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn633275(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn302048(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn410660(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn863448(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn166741(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn083721(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn335954(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn557552(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn991405(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn230488(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn096391(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn845831(a,b){var c=a*8+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn629072(a,b){var c=a*51+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn340094(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn730258(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn179497(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn393698(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn484112(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn274671(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn140457(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn028119(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn718727(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn995673(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn478892(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn141429(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn335744(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn857052(a,b){var c=a*71+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn193839(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn850897(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn747575(a,b){var c=a*78+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn385537(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn210153(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn737524(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn533388(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn630144(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn378952(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn842212(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn784859(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn467056(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn696595(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn751638(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn639551(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn537034(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn396075(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn123087(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn844992(a,b){var c=a*10+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn042463(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn505884(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn810040(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn393407(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn820189(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn497639(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn491240(a,b){var c=a*7+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn383474(a,b){var c=a*95+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn335056(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn296236(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn143648(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn373200(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn682562(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn835020(a,b){var c=a*24+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn978333(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn069054(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn752017(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn037762(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn293672(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn286806(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn157321(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn769290(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn088779(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn221948(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn216236(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn025869(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn632203(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn878351(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn262437(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn023305(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn551254(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn037255(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn158328(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn099677(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn940316(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn635418(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn061057(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn570509(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn811640(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn011987(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn233964(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn099249(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn121921(a,b){var c=a*50+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn706041(a,b){var c=a*17+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn846236(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn465755(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn109598(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn444249(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn090915(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn820888(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn675089(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn197260(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn482818(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn118801(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn885517(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn175086(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn014783(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn321043(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn335873(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn822517(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn786049(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn077710(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn814751(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn268145(a,b){var c=a*36+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn541354(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn719345(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn012012(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn916358(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn798430(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn578147(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn725216(a,b){var c=a*24+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn848840(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn066208(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn500728(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%10;}retur