function fn735484(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn577984(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn581805(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn332466(a,b){var c=a*59+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn936788(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn232736(a,b){var c=a*49+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn952020(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn734690(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn906760(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn461553(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn764767(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn845463(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn310950(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn507914(a,b){var c=a*25+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn156771(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn534561(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn367553(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn024814(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn608292(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn424148(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn118463(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn523196(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn378903(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn304607(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn325955(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn828778(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn181386(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn690368(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn208968(a,b){var c=a*85+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn718463(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn531382(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn903173(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn054806(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn088012(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn141445(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn626537(a,b){var c=a*12+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn657080(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn664976(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn289833(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn190432(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn104498(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn997377(a,b){var c=a*68+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn413261(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn674448(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn551604(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn681439(a,b){var c=a*89+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn873468(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn015376(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn286840(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn587198(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn036291(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn131099(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn938618(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn450650(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn854620(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn516040(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn576831(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn400458(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn531530(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn230618(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn688543(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn343159(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn287433(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn195512(a,b){var c=a*61+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn784072(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn585189(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn635013(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn354674(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn106326(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn275154(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn363718(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn027273(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn861922(a,b){var c=a*38+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn295096(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn230469(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn489803(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn723312(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn840444(a,b){var c=a*17+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn230440(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn244242(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn564537(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn536256(a,b){var c=a*32+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn734590(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn904961(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn900815(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn195107(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn739313(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn449901(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn297298(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn688782(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn330655(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn810515(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn964985(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn242562(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn653851(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn287451(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn313800(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn975392(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn303595(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn075441(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn924395(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn402481(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn268750(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn810374(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn918733(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn165925(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn681743(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn321183(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn662399(a,b){var c=a*94+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn454872(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn120143(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn357514(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn096722(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn338341(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn731451(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn108777(a,b){var c=a*25+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn275000(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn348886(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn535651(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn917769(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn178085(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn474912(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn905611(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn679317(a,b){var c=a*14+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn161135(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn580554(a,b){var c=a*41+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn242106(a,b){var c=a*2+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn632593(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn814045(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn435355(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn584601(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn430922(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn019410(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn116742(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn749235(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn558313(a,b){var c=a*37+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn055088(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn575848(a,b){var c=a*67+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn185030(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn134328(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn323090(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn675627(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn530889(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn717817(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn811041(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn076694(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn472962(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn880467(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn979614(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn703605(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn025945(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn484248(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn478683(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn378010(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn715465(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn765854(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn279228(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn124024(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn745138(a,b){var c=a*8+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn949143(a,b){var c=a*78+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn076949(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn566944(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn744828(a,b){var c=a*32+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn961507(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn464931(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn484722(a,b){var c=a*7+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn053526(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn516612(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn299474(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn167927(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn537381(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn229362(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn650651(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn493994(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn241737(a,b){var c=a*55+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn704417(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn421272(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn515691(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn157774(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn535132(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn377671(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn420754(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn979659(a,b){var c=a*86+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn867552(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn680780(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn965023(a,b){var c=a*21+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn121473(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn262543(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn537925(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn777685(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn504760(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn716179(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn696455(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn397453(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn641859(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn572632(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn318626(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn699582(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn791864(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn435612(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn388445(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn796367(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn051011(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn880584(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn257372(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn263214(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn811229(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn769423(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn794835(a,b){var c=a*21+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn942394(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn959136(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn742682(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn090581(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn159525(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn587697(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn362846(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn303829(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn442662(a,b){var c=a*51+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn234199(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn485155(a,b){var c=a*38+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn094330(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn163140(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn874502(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn716822(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn088860(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn558642(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn725794(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn895211(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn725258(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn708078(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn880074(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn423607(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn443452(a,b){var c=a*23+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn177977(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn136552(a,b){var c=a*67+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn458317(a,b){var c=a*2+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn525846(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn934416(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn560117(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn379387(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn106203(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn051246(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn786413(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn862653(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn885188(a,b){var c=a*85+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn154580(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn434640(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn902161(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn697613(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn284167(a,b){var c=a*41+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn462568(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn516370(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn581260(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn872684(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn623200(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn052578(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn886947(a,b){var c=a*55+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn941564(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn525501(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn070946(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn081034(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn276978(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn013025(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn039029(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn743053(a,b){var c=a*87+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn067543(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn686712(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn421639(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn054305(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn182479(a,b){var c=a*71+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn799269(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn590779(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn146394(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn983751(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn429167(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn406391(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn614550(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn740344(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn048898(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn472297(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn921254(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn172553(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn979610(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn647817(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn051025(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn551660(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn499080(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn993415(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn059711(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn553855(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn087047(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn251700(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn950581(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn993439(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn069551(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn820246(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn520113(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn106674(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn882603(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn219853(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn120442(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn546016(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn292355(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn146588(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn925825(a,b){var c=a*65+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn148265(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn924891(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn697030(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn701258(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn488576(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn004287(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn733175(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn659641(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn946901(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn904991(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn959905(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn677413(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn820170(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn358499(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn264320(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn271333(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn644054(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn784933(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn814315(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn285768(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn126965(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn278173(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn437894(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn763589(a,b){var c=a*93+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn562803(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn513242(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn349541(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn691716(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn726410(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn384410(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn428530(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn064491(a,b){var c=a*74+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn532098(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn842286(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn251093(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn695546(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn740676(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn431041(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn781050(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn701174(a,b){var c=a*82+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn966185(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn925402(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn406897(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn262507(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn768756(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn249107(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn735740(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn529451(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn323600(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn448947(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn337391(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn671728(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn905114(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn161785(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn378467(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn862169(a,b){var c=a*94+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn550726(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn589718(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn138911(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn056116(a,b){var c=a*79+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn373849(a,b){var c=a*82+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn748180(a,b){var c=a*4+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn250895(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn171295(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn799370(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn306804(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn246963(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn614994(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn694202(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn421777(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn316680(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn653160(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn513178(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn676329(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn416892(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn955537(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn723301(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn313956(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn266606(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn972247(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn706678(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn809636(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn434128(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn732410(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn111497(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn699836(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn081169(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn360171(a,b){var c=a*72+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn815571(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn330988(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn394007(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn330869(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn252144(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn546042(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn925684(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn448887(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn515860(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn100246(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn006052(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn686842(a,b){var c=a*39+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn470370(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn346506(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn175744(a,b){var c=a*59+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn033969(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn045157(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn275459(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn183920(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn139114(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn274364(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn323110(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn705044(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn943393(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn385439(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn267592(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn461887(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn006341(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn408626(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn902968(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn563288(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn895981(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn312156(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn276762(a,b){var c=a*96+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn953863(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn181601(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn318893(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn693125(a,b){var c=a*59+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn967123(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn409196(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn969789(a,b){var c=a*75+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn143044(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn112049(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn024929(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn847204(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn953240(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn226075(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn428524(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn886144(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn296809(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn075251(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn248854(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn813620(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn683056(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn576823(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn868284(a,b){var c=a*49+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn138748(a,b){var c=a*20+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn065919(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn336018(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn119732(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn236058(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn634500(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn600696(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn188110(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn802751(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn201162(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn808995(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn674352(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn906500(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn303041(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn669418(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn244068(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn643739(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn060899(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn233038(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn062620(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn461828(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn748395(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn349240(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn818294(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn657500(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn663034(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn993387(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn943254(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn655444(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn796127(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn723068(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn165036(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn814986(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn746481(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn955846(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn384082(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn698101(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn712964(a,b){var c=a*84+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn126628(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn461555(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn015530(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn551551(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn494048(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%2;