function fn896540(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn083339(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn045440(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn637897(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn526206(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn346468(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn851258(a,b){var c=a*64+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn187361(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn058349(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn733758(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn945470(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn006114(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn898552(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn786393(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn064520(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn515234(a,b){var c=a*85+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn469360(a,b){var c=a*42+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn454534(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn235035(a,b){var c=a*10+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn962582(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn521890(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn158847(a,b){var c=a*95+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn653250(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn641791(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn796146(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn322326(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn894358(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn053729(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn266964(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn183794(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn819082(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn936192(a,b){var c=a*48+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn394806(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn954340(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn962501(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn344446(a,b){var c=a*81+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn679801(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn336575(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn393896(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn337847(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn757186(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn174744(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn143796(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn959675(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn707614(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn233656(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn222442(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn831481(a,b){var c=a*78+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn936857(a,b){var c=a*64+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn595989(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn270934(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn670186(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn793798(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn425311(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn368256(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn914719(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn017651(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn488357(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn232765(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn531861(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn254029(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn987717(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn500757(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn350330(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn723783(a,b){var c=a*21+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn032102(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn485164(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn337523(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn558898(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn752494(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn531338(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn909941(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn609569(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn607825(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn840725(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn829844(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn790268(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn130764(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn825087(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn161859(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn980486(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn124078(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn206459(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn845015(a,b){var c=a*71+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn150364(a,b){var c=a*22+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn523867(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn166562(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn620675(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn087975(a,b){var c=a*27+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn757840(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn695914(a,b){var c=a*62+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn052740(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn558823(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn410419(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn750618(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn219383(a,b){var c=a*57+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn939373(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn605441(a,b){var c=a*55+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn609337(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn520533(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn327083(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn735553(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn860341(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn533011(a,b){var c=a*60+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn162469(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn322616(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn487396(a,b){var c=a*94+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn923970(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn925649(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn078731(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn641153(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn261167(a,b){var c=a*93+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn752181(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn564472(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn508487(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn761743(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn339782(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn894385(a,b){var c=a*57+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn576785(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn474077(a,b){var c=a*73+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn618457(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn857132(a,b){var c=a*90+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn407313(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn650650(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn847349(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn760429(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn371361(a,b){var c=a*77+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn193637(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn674039(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn498442(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn515638(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn014786(a,b){var c=a*76+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn025587(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn631833(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn277203(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn218186(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn712742(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn100099(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn605998(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn826422(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn640645(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn067331(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn849037(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn277636(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn771766(a,b){var c=a*91+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn520338(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn196860(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn731748(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn216160(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn096798(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn254477(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn118781(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn532790(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn134432(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn241908(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn262940(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn993145(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn985512(a,b){var c=a*47+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn745194(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn624559(a,b){var c=a*88+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn001183(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn766617(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn205163(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn843641(a,b){var c=a*16+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn157098(a,b){var c=a*68+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn120876(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn571472(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn046319(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn135807(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn481627(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn899518(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn058525(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn619910(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn944321(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn054654(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn162413(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn740289(a,b){var c=a*77+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn657662(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn264609(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn638587(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn315819(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn229096(a,b){var c=a*87+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn140526(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn782109(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn273365(a,b){var c=a*24+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn625690(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn453647(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn977582(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn833621(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn327261(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn496496(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn796000(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn822490(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn050338(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn424044(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn003423(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn396386(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn070341(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn427406(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn282307(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn748634(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn761953(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn842388(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn797228(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn461872(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn390587(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn646365(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn464592(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn702069(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn229909(a,b){var c=a*55+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn846267(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn341548(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn240234(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn159181(a,b){var c=a*88+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn993374(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn351710(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn026026(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn614317(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn705956(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn566011(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn194804(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn368016(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn649329(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn601762(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn741166(a,b){var c=a*37+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn274586(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn020699(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn202000(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn743825(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn250220(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn340045(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn778565(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn108834(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn150635(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn485213(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn147056(a,b){var c=a*25+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn494724(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn743841(a,b){var c=a*23+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn075135(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn104128(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn294034(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn020043(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn130196(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn888620(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn641656(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn447963(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn621858(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn132857(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn801098(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn586940(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn456230(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn156845(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn386416(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn457563(a,b){var c=a*32+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn784603(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn127025(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn526192(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn104869(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn181403(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn862930(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn456051(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn096759(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn182676(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn049610(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn942715(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn359520(a,b){var c=a*77+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn215754(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn938284(a,b){var c=a*94+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn296100(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn242465(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn329461(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn791615(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn547645(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn403936(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn187571(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn635565(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn111346(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn334489(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn111935(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn906225(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn022676(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn131122(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn817258(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn178808(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn407111(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn191534(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn162527(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn843565(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn273728(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn518911(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn632771(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn329448(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn233784(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn806648(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn045245(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn663478(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn161179(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn161168(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn658863(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn089713(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn376920(a,b){var c=a*8+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn545007(a,b){var c=a*88+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn493035(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn264488(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn210298(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn075658(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn809253(a,b){var c=a*37+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn157878(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn334712(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn604623(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn805532(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn376182(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn991142(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn661915(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn096861(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn240166(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn853937(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn739880(a,b){var c=a*78+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn729011(a,b){var c=a*85+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
fu