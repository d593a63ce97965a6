function fn071949(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn165394(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn729192(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn360564(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn931369(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn950027(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn492831(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn451037(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn954362(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn909576(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn818704(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn158784(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn783492(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn122213(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn719906(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn895161(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn372995(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn853802(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn148074(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn876305(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn873686(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn370406(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn273948(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn769765(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn264640(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn968511(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn180098(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn977858(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn209718(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn003074(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn719006(a,b){var c=a*25+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn563187(a,b){var c=a*21+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn024311(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn163813(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn734491(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn624100(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn767938(a,b){var c=a*67+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn140310(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn277490(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn346157(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn740821(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn471244(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn515130(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn852125(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn440925(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn085743(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn852130(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn367844(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn546683(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn369650(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn055332(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn559344(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn663642(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn096456(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn875594(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn925035(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn977803(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn351561(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn206891(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn775673(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn891306(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn696636(a,b){var c=a*24+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn441814(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn992509(a,b){var c=a*3+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn922334(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn198379(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn418783(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn220115(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn705049(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn637612(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn021600(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn142306(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn418729(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn469851(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn524292(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn786533(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn017115(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn259858(a,b){var c=a*47+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn055004(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn512154(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn793589(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn088433(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn598287(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn609703(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn599709(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn129334(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn338086(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn680469(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn418947(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn677433(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn304733(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn048680(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn122269(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn552161(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn759846(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn252134(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn968736(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn337901(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn155145(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn341960(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn361303(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn026937(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn387208(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn027743(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn952461(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn024722(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn916485(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn427579(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn837894(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn062088(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn302875(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn124906(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn760996(a,b){var c=a*28+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn041470(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn641007(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn582320(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn077781(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn567284(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn068847(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn099309(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn325940(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn746813(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn748300(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn719422(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn320738(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn534699(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn399794(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn790721(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn023324(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn618350(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn115456(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn565925(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn527818(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn062678(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn803943(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn890026(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn858006(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn991775(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn347613(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn370173(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn354432(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn551332(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn962726(a,b){var c=a*90+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn779967(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn575294(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn340898(a,b){var c=a*71+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn305820(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn664383(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn402328(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn209550(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn988178(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn364253(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn717346(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn784956(a,b){var c=a*10+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn506214(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn046128(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn703743(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn915572(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn252338(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn887981(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn562940(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn659639(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn317668(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn029203(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn936443(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn217220(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn186194(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn483371(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn342150(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn659818(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn453418(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn983049(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn295957(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn343180(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn730466(a,b){var c=a*27+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn185959(a,b){var c=a*40+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn037856(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn452155(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn159887(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn350107(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn415331(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn421583(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn740002(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn075201(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn059123(a,b){var c=a*84+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn029700(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn209860(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn644157(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn756535(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn426463(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn699496(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn749279(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn952186(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn587887(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn117368(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn506938(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn927156(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn147323(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn326025(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn186400(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn463670(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn578794(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn233672(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn707320(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn327366(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn734508(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn028091(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn566717(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn634544(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn859863(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn005478(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn118015(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn119277(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn945147(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn879911(a,b){var c=a*2+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn403801(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn360532(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn279837(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn179348(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn184473(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn876509(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn180641(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn855398(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn711954(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn792122(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn668809(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn989814(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn536088(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn959648(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn040490(a,b){var c=a*54+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn710623(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn042810(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn419199(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn017959(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn828429(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn814836(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn005653(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn707021(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn929837(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn543096(a,b){var c=a*75+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn894772(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn410229(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn916704(a,b){var c=a*41+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn685401(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn257207(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn082966(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn498065(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn263985(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn060518(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn644649(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn715438(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn609652(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn307312(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn092828(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn518384(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn731073(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn037330(a,b){var c=a*25+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn370205(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn152679(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn417117(a,b){var c=a*81+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn024261(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn686740(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn309420(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn725250(a,b){var c=a*25+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn647328(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn502616(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn467811(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn046072(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn118123(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn414255(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn228677(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn453522(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn906396(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn733430(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn246125(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn263468(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn810542(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn042428(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn921730(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn896726(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn083811(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn159413(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn479143(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn874232(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn538039(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn876818(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn400974(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn779398(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn680991(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn277921(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn396098(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn779928(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn183800(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn008205(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn583894(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn554681(a,b){var c=a*52+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn942948(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn255476(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn456436(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn256169(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn620052(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn579874(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn982503(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn628893(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn886831(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn411563(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn183953(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn971280(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn222885(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn091792(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn463770(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn962476(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn801882(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn205145(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn944404(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn975387(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn167367(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn301832(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn696043(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn244907(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn651451(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn177726(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn847201(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn539655(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn922888(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn489432(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn982204(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn505934(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn291013(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn239299(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn330702(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn766962(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn772430(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn637436(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn011103(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn753077(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn693158(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn222312(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn038412(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn420556(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn213684(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn021509(a,b){var c=a*35+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn237688(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn764099(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn124184(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn516895(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn747644(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn912112(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn511715(a,b){var c=a*76+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn602232(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn374428(a,b){var c=a*95+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn442130(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn293076(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn768384(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn945500(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn088006(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn822896(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn626981(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn526717(a,b){var c=a*67+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn621352(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn167244(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn192625(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn882721(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn187875(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn320604(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn778038(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn034317(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn162413(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn523189(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn938298(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn210297(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn216656(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn534296(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn795651(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn782942(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn658115(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn490949(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn146421(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn023186(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn243727(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn028160(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn634358(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn652183(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn945402(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn993394(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn167848(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn283632(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn779308(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn893747(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn387943(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn174126(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn334527(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn832188(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn117744(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn553842(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn960085(a,b){var c=a*46+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn372879(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn317453(a,b){var c=a*36+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn721575(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn085329(a,b){var c=a*93+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn097742(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn935757(a,b){var c=a*85+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn275739(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn822370(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn514701(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn784394(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn391791(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn274160(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn797576(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn814021(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn439070(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn867120(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn635146(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn274855(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn398442(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn778198(a,b){var c=a*12+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn572939(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn199894(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn953014(a,b){var c=a*7+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn142516(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn153829(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn079719(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn729029(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn869401(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn198835(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn448120(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn975163(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn617677(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn314894(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn480381(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn249015(a,b){var c=a*33+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn121014(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn386431(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn542667(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn923455(a,b){var c=a*70+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn740240(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn523647(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn554654(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn103822(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn659318(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn782570(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn785948(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn694912(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn406203(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn140790(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn533397(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn045751(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn496179(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn823369(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn312295(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn268208(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn176487(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn380002(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn610205(a,b){var c=a*25+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn226391(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn058492(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn457733(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn835279(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn343219(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn367293(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn991926(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn562366(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn526665(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn796401(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn798780(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn115672(a,b){var c=a*79+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn574734(a,b){var c=a*42+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn747943(a,b){var c=a*23+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn787850(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn458984(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn563435(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn784933(a,b){var c=a*71+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn936761(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn371522(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn740173(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn523648(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn352702(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn807772(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn992132(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn992465(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn755112(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn951787(a,b){var c=a*49+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn233630(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn377261(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn799420(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn779456(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn048870(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn053109(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn165401(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn831361(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn497260(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn888043(a,b){var c=a*45+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn544560(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn947725(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn211896(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn277645(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn926791(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn653500(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn785630(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn553076(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn375472(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn397082(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn410340(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn430930(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn404326(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn074629(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn425020(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn641892(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn908855(a,b){var c=a*93+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn801187(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn942193(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn410780(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn485625(a,b){var c=a*88+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn639916(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn247708(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn025138(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn164261(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn754387(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn911758(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn222064(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn223347(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn283985(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn212672(a,b){var c=a*38+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn481372(a,b){var c=a*61+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn309525(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn170210(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn902544(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn368132(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn092403(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn228496(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn236543(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn152759(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn107468(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn178185(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn057482(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn554511(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn186352(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn293053(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn028563(a,b){var c=a*40+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn480808(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn650194(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn006689(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn009956(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn519828(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn410361(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn102715(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn550260(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn710807(a,b){var c=a*44+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn633851(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn813786(a,b){var c=a*6+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn658850(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn056506(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn638287(a,b){var c=a*66+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn850237(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn361095(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn295748(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn478750(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn111543(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn592073(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn050336(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn973934(a,b){var c=a*13+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn164769(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn225396(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn261231(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn212251(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn374360(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn843068(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn525431(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn120204(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn549224(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn573844(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn461434(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn118103(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn737684(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn915242(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn123389(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn532526(a,b){var c=a*17+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn636365(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn864825(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn717636(a,b){var c=a*48+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn669611(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn346787(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn533769(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn483713(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn293288(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn311596(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn540031(a,b){var c=a*94+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn168055(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn500897(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn252882(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn652431(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn288722(a,b){var c=a*77+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn540756(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn077236(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn926754(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn709838(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn122780(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn645436(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn659456(a,b){var c=a*56+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn253241(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn804867(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn056733(a,b){var c=a*5+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn736716(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn970262(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn978041(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn114230(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn160773(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn069913(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn901056(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn480312(a,b){var c=a*55+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn648936(a,b){var c=a*77+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn897893(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn772839(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn218001(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn592335(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn034005(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn753880(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn319571(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn819140(a,b){var c=a*2+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn271820(a,b){var c=a*58+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn897924(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn951120(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn671755(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn891286(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn089453(a,b){var c=a*77+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn814672(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn525665(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn534866(a,b){var c=a*95+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn917581(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn126559(a,b){var c=a*59+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn170767(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn788076(a,b){var c=a*48+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn659431(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn311658(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn055492(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn706386(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn982109(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn614677(a,b){var c=a*12+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn552349(a,b){var c=a*64+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn730626(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn701379(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn873186(a,b){var c=a*95+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn422544(a,b){var c=a*67+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn958707(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn340781(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn249092(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn351334(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn847406(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn304739(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn259337(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn458113(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn459143(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn471335(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn125061(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn266110(a,b){var c=a*81+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn007290(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn494660(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn464069(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn454449(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn726807(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn469745(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn713749(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn638131(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn487173(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn229035(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn371346(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn174477(a,b){var c=a*88+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn165134(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn266800(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn004664(a,b){var c=a*56+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn413178(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn827287(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn778744(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn282276(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn578081(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn719928(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn399908(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn492399(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn876836(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn678142(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn898872(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn277377(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn626470(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn573472(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn394426(a,b){var c=a*14+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn472721(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn149367(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn867321(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn787059(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn783596(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn009749(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn596805(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn045053(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn369792(a,b){var c=a*50+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn675994(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn783515(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn009818(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn796994(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn523085(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn665206(a,b){var c=a*73+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn844875(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn524022(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn979899(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn995564(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn369469(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn426243(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn288878(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn631371(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn252904(a,b){var c=a*39+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn893484(a,b){var c=a*96+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn683752(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn390831(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn525900(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn466768(a,b){var c=a*19+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn123358(a,b){var c=a*68+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn336983(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn463283(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn756363(a,b){var c=a*97+b;f