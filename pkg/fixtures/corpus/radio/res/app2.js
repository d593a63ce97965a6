function fn231731(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn264682(a,b){var c=a*55+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn500745(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn727644(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn068287(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn591082(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn920404(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn165816(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn916502(a,b){var c=a*89+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn096201(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn233237(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn955275(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn074390(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn225127(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn059048(a,b){var c=a*4+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn526536(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn857818(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn316676(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn184075(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn070886(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn778153(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn383508(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn814813(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn653151(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn095519(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn394990(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn836828(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn088492(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn333079(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn555275(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn581155(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn210015(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn348574(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn130621(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn033367(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn842424(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn260458(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn299064(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn490519(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn429925(a,b){var c=a*96+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn053532(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn668680(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn367403(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn227687(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn898281(a,b){var c=a*9+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn975944(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn941842(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn068212(a,b){var c=a*96+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn617312(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn293994(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn589881(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn373439(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn065089(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn057010(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn886513(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn255419(a,b){var c=a*39+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn349294(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn345933(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn876937(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn327103(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn095749(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn736699(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn822276(a,b){var c=a*91+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn311965(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn625085(a,b){var c=a*5+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn093388(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn992715(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn181232(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn175533(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn387815(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn888242(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn043252(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn619304(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn248186(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn396207(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn243144(a,b){var c=a*34+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn711128(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn106025(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn562235(a,b){var c=a*41+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn211085(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn065518(a,b){var c=a*5+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn795887(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn104424(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn838437(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn360358(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn290947(a,b){var c=a*44+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn322021(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn366719(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn948478(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn353185(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn797338(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn026821(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn225647(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn591797(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn960909(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn140320(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn962762(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn260796(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn159937(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn402705(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn900359(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn399508(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn126896(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn292764(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn887310(a,b){var c=a*97+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn223041(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn473179(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn878380(a,b){var c=a*33+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn802046(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn421050(a,b){var c=a*84+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn014032(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn245979(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn537276(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn534827(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn933864(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn830517(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn505522(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn508394(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn407366(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn712600(a,b){var c=a*45+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn842117(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn679151(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn218465(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn424903(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn597286(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn542139(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn839825(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn813820(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn568621(a,b){var c=a*18+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn271677(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn710626(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn148100(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn493115(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn779502(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn896763(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn049497(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn891675(a,b){var c=a*97+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn813820(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn098110(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn193039(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn988937(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn139563(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn065887(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn878569(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn494209(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn862933(a,b){var c=a*8+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn258155(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn468863(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn095649(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn376600(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn641025(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn394756(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn622900(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn610316(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn085512(a,b){var c=a*67+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn083914(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn996022(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn251989(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn385398(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn292293(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn563947(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn055734(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn889532(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn520745(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn689670(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn834720(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn412521(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn019665(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn052525(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn100307(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn005862(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn439793(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn115976(a,b){var c=a*54+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn497009(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn800808(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn319960(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn259832(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn597650(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn501715(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn531911(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn475412(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn477848(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn697848(a,b){var c=a*23+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn521095(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn440961(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn428642(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn426998(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn239919(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn720060(a,b){var c=a*23+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn989331(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn655933(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn818108(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn266198(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn319053(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn791052(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn955242(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn226584(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn293476(a,b){var c=a*45+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn309446(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn008870(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn896102(a,b){var c=a*26+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn528427(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn928550(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn858800(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn762194(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn109106(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn395121(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn770256(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn906573(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn088215(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn603556(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn329562(a,b){var c=a*20+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn113089(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn102688(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn342201(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn040070(a,b){var c=a*26+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn046459(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn608326(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn856667(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn372720(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn484974(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn577678(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn393146(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn754837(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn490124(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn748018(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn945412(a,b){var c=a*21+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn094546(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn655050(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn229778(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn162605(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn696695(a,b){var c=a*45+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn327266(a,b){var c=a*18+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn639125(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn525004(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn200184(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn095075(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn538661(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn123457(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn094564(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn557637(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn056963(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn859467(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn274619(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn570622(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn994696(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn250505(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn620475(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn636395(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn223815(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn161734(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn021684(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn139543(a,b){var c=a*46+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn082276(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn443094(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn340551(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn576487(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn664255(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn045634(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn399081(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn901478(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn105772(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn844801(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn806859(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn781281(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn022738(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn810212(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn908657(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn718437(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn790340(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn463793(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn864143(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn667758(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn548220(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn028545(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn447094(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn906021(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn266101(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn588719(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn486701(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn886460(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn220631(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn214461(a,b){var c=a*36+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn845740(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn699247(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn180936(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn516139(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn778268(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn599124(a,b){var c=a*31+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn476757(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn057463(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn989455(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn055656(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn173609(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn138164(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn901080(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn573406(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn284399(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn079219(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn369138(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn384359(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn364089(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn966841(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn639719(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn137652(a,b){var c=a*26+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn497349(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn351603(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn226247(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn873355(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn823062(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn190227(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn148915(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn816367(a,b){var c=a*79+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn742515(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn268164(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn091657(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn098109(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn677772(a,b){var c=a*47+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn032123(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn063161(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn406034(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn257564(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn083449(a,b){var c=a*28+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn801170(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn227834(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn958411(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn961080(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn578111(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn281717(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn106112(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn667698(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn690921(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn425720(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn124007(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn062595(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn692142(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn290852(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn191562(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn949886(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn063956(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn435929(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn482952(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn932608(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn009092(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn873818(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn346194(a,b){var c=a*3+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn301772(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn702045(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn689171(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn885663(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn327243(a,b){var c=a*22+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn177980(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn585132(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn746795(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn089975(a,b){var c=a*63+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn395523(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn197641(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn461248(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn106514(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn125183(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn906982(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn979043(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn941276(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn056186(a,b){var c=a*30+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn119000(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn853992(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn270561(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn267358(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn237113(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn092290(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn049289(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn171319(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn373329(a,b){var c=a*94+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn986957(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn066081(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn674056(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn459754(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn217640(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn706095(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn516835(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn544736(a,b){var c=a*25+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn626176(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn913372(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn647148(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn435824(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn517741(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn601152(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn557581(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn964284(a,b){var c=a*72+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn146499(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn391133(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn554265(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn160926(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn464920(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn776411(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn613228(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn603141(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn430293(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn110795(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%7