function fn829418(a,b){var c=a*66+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn670112(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn385520(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn068504(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn698067(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn133037(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn201113(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn326671(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn312739(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn001125(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn588993(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn118451(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn886646(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn422760(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn065013(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn378455(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn588046(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn607303(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn275825(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn652965(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn299249(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn464136(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn223239(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn426354(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn236929(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn964223(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn507093(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn173417(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn783585(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn940710(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn766635(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn537304(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn498380(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn109862(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn055241(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn427051(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn797469(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn754929(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn111005(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn382890(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn241302(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn122727(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn767203(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn478739(a,b){var c=a*22+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn538823(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn676327(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn837886(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn940399(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn860528(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn624446(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn005227(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn708240(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn810521(a,b){var c=a*5+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn297429(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn620084(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn805928(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn764122(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn456491(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn174486(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn686899(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn155721(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn243723(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn281546(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn064390(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn595820(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn170827(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn516355(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn166365(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn357075(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn418291(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn323636(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn096824(a,b){var c=a*86+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn300995(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn218649(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn984520(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn373638(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn807785(a,b){var c=a*90+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn389497(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn530898(a,b){var c=a*80+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn869352(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn712883(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn403574(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn716883(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn351633(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn660382(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn843666(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn617887(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn612851(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn703621(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn811370(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn067936(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn806764(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn472397(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn138843(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn186104(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn163494(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn954328(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn332276(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn528860(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn341557(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn628887(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn065669(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn207746(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn139174(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn697672(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn019586(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn084506(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn499077(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn877582(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn386936(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn603946(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn725992(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn885971(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn147333(a,b){var c=a*58+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn001114(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn232337(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn959171(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn119005(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn543517(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn107405(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn732514(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn475345(a,b){var c=a*55+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn705792(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn555935(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn882955(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn112288(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn329441(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn997318(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn860204(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn727461(a,b){var c=a*84+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn361034(a,b){var c=a*50+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn749671(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn770811(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn605853(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn465273(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn259799(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn164895(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn435637(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn956423(a,b){var c=a*33+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn908779(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn836710(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn628662(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn272107(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn203934(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn654091(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn757604(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn195989(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn754493(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn097174(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn115507(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn290407(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn464377(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn359296(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn210848(a,b){var c=a*82+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn682829(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn142236(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn718590(a,b){var c=a*96+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn957268(a,b){var c=a*25+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn976399(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn467500(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn964214(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn309621(a,b){var c=a*22+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn322890(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn093918(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn647306(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn115241(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn704193(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn474568(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn260512(a,b){var c=a*55+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn605899(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn929578(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn705168(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn237846(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn642973(a,b){var c=a*16+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn498782(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn662973(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn202853(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn864753(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn170157(a,b){var c=a*91+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn214633(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn385022(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn620875(a,b){var c=a*77+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn410299(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn300009(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn916154(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn214699(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn971315(a,b){var c=a*67+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn305562(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn565969(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn696331(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn304172(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn023019(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn651793(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn594370(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn554424(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn270690(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn161904(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn414893(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn413345(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn670973(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn086643(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn301015(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn372569(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn988725(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn429516(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn759742(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn971184(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn713333(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn542346(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn663314(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn972678(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn590379(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn240933(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn759226(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn635615(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn150775(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn542802(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn480022(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn918236(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn171980(a,b){var c=a*93+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn655736(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn201796(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn768545(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn169696(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn625389(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn504273(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn377008(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn318822(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn357939(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn447803(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn240783(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn677654(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn254114(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn996187(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn693155(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn609324(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn063910(a,b){var c=a*93+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn847971(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn786246(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn024168(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn949840(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn727115(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn994410(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn327565(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn089385(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn392389(a,b){var c=a*53+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn394235(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn535971(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn914515(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn247090(a,b){var c=a*88+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn070499(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn828816(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn858440(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn130005(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn974399(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn536679(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn625930(a,b){var c=a*29+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn072963(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn517788(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn117141(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn002132(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn062551(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn942855(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn660661(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn609770(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn171664(a,b){var c=a*11+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn585115(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn044107(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn194280(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn300343(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn092749(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn056164(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn452834(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn010214(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn556907(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn924116(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn849164(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn432635(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn155654(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn485362(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn526299(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn396799(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn532280(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn994326(a,b){var c=a*89+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn926006(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn211830(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn018679(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn551072(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn790342(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn512627(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn416120(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn503384(a,b){var c=a*82+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn092521(a,b){var c=a*50+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn228575(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn049703(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn233086(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn758588(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn823770(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn426616(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn358920(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn030515(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn233208(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn624699(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn611511(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn733820(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn695117(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn904996(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn333604(a,b){var c=a*29+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn685029(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn377120(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn083198(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn407833(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn919287(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn783860(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn149796(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn805654(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn498160(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn157530(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn841574(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn449363(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn504503(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn540339(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn101256(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn326426(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn557471(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn697626(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn074367(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn842991(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn099823(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn881654(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn900173(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn416831(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn587259(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn881716(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn576777(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn976885(a,b){var c=a*66+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn634320(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn705570(a,b){var c=a*33+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn602960(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn647996(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn274327(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn750612(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn145797(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn807329(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn898469(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn649174(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn244891(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn453565(a,b){var c=a*35+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn219545(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn631843(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn706341(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn563748(a,b){var c=a*42+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn173348(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn083088(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn589646(a,b){var c=a*56+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn116922(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn498009(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn249957(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn705562(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn381553(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn551588(a,b){var c=a*64+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn455807(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn222694(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn164586(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn781045(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn745308(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn056195(a,b){var c=a*15+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn278013(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn681355(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn238366(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn054816(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn529852(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn248120(a,b){var c=a*65+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn387446(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn582477(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn203478(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn545835(a,b){var c=a*3+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn273792(a,b){var c=a*3+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn580322(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn543917(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn940588(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn881394(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn916397(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn740923(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn513154(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn646594(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn357692(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn654765(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn271031(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn349331(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn809756(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn299428(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn563949(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn310178(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn628756(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn168771(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn296799(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn564940(a,b){var c=a*79+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn669923(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn531514(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn232293(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn851414(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn663573(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn314429(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn239290(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn724273(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn072315(a,b){var c=a*81+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn424242(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn830492(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn337611(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn762532(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn791965(a,b){var c=a*22+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn600461(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn714129(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn244277(a,b){var c=a*37+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn867926(a,b){var c=a*86+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn667990(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn396384(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn601791(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn563285(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn871117(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn633513(a,b){var c=a*88+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn629261(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn717872(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn571096(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn320268(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn509705(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn185533(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn364383(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn797882(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn306401(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn008577(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn461195(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn948159(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn228573(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn265328(a,b){var c=a*27+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn977675(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn623876(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn419639(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn853704(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn508928(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn572496(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn883102(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn780806(a,b){var c=a*15+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn544542(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn535399(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn869156(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn988144(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn566185(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn736009(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn728500(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn637762(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn213737(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn561736(a,b){var c=a*70+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn726186(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn138100(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn133953(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn547638(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn586190(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn330108(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn520417(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn689697(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn145120(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn252201(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn575478(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn161071(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn958575(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn725522(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn304412(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn859571(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn638439(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn009702(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn153866(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn112937(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn692817(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn083800(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn316682(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn818811(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn419719(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn848696(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn522288(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn922090(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn092776(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn172063(a,b){var c=a*71+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn013040(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn734142(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn071803(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn558444(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn275427(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn126527(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn430443(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn062451(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn790221(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn581731(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn565103(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn077741(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn171936(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn403562(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn231041(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn156578(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn674325(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn811562(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn973525(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn717143(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn704268(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn176545(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn718891(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn146628(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn391596(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn767844(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn757320(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn942796(a,b){var c=a*75+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn445037(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn822717(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn369287(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn101833(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn666056(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn727176(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn415569(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn672370(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn024717(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn520476(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn600540(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn219044(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn336020(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn274305(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn326475(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn249396(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn355672(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn201616(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn193338(a,b){var c=a*70+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn330433(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn271890(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn462938(a,b){var c=a*87+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn218063(a,b){var c=a*20+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn348910(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn194160(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn336329(a,b){var c=a*95+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn471709(a,b){var c=a*68+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn907173(a,b){var c=a*4+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn537434(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn496326(a,b){var c=a*48+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn948239(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn433131(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn901718(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn781767(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn160255(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn740760(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn952537(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn409677(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn928248(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn929721(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn587117(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn773542(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn472550(a,b){var c=a*15+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn612608(a,b){var c=a*42+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn242022(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn798957(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn253150(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn882514(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn767590(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn852292(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn048607(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn902037(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn265459(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn241153(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn393357(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn374980(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn456549(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn997156(a,b){var c=a*32+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn446742(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn397338(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn176746(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn297737(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn865444(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn210795(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn987046(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn639494(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn267396(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn199816(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn320009(a,b){var c=a*21+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn799193(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn189266(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn727517(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn672152(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn263009(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn097634(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn401008(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn504484(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn538527(a,b){var c=a*61+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn370591(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn974639(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn150372(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn379235(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn213143(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn459394(a,b){var c=a*96+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn176301(a,b){var c=a*53+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn821888(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn227050(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn960864(a,b){var c=a*9+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn045239(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn938677(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn377588(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn495743(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn275266(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn079167(a,b){var c=a*32+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn395592(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn440998(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn836376(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn189228(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn185230(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn235965(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn752803(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn922248(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn900876(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn283372(a,b){var c=a*66+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn656855(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn657850(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn469262(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn736110(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn120202(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn471105(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn170519(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn400050(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn118646(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn172051(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn089549(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn135138(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn733449(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn870833(a,b){var c=a*30+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn943766(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn117800(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn890248(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn045822(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn241727(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn018617(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn473726(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn266679(a,b){var c=a*5+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn127129(a,b){var c=a*21+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn930980(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn382397(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn359860(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn662104(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn416379(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn917834(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn656600(a,b){var c=a*88+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn864519(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn191629(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn071270(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn934694(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn261187(a,b){var c=a*44+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn870274(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn648858(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn498002(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn940090(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn536025(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn787257(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn121434(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn415977(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn911326(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn287625(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn235399(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn493793(a,b){var c=a*93+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn453549(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn568402(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn021103(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn287809(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn524755(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn280291(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn017146(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn348976(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn255806(a,b){var c=a*39+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn002446(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn390781(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn569926(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn202334(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn807913(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn144972(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn984080(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn178027(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn755841(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn964473(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn730544(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn378385(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn821024(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn085513(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn560730(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn572569(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn106291(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn753698(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn487681(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%12