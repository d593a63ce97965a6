function fn460673(a,b){var c=a*45+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn065729(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn610366(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn344876(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn044999(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn006797(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn928480(a,b){var c=a*44+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn854141(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn964756(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn825584(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn689928(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn059564(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn351636(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn297883(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn240656(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn630560(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn048418(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn397473(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn062782(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn554755(a,b){var c=a*12+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn133464(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn479549(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn088435(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn974028(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn081617(a,b){var c=a*29+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn787258(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn393070(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn321196(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn917146(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn426950(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn803551(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn596856(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn171744(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn785666(a,b){var c=a*50+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn028979(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn152904(a,b){var c=a*94+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn013078(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn883292(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn657195(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn546831(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn459130(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn206317(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn740305(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn922866(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn087484(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn732577(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn152598(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn529654(a,b){var c=a*37+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn254351(a,b){var c=a*58+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn369704(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn887880(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn870197(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn824601(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn137638(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn343366(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn385189(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn540330(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn431090(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn742140(a,b){var c=a*92+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn687449(a,b){var c=a*13+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn401450(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn769433(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn660836(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn224756(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn745395(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn161590(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn032257(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn319395(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn035427(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn088231(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn129245(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn794135(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn243473(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn914497(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn823442(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn233984(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn292056(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn479882(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn992356(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn894270(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn380685(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn906024(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn237542(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn226597(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn574931(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn643806(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn219944(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn634950(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn030551(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn931461(a,b){var c=a*95+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn170893(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn777502(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn655446(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn150559(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn866499(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn118506(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn195347(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn357208(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn354937(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn735556(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn289622(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn199226(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn546143(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn367452(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn192030(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn737939(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn339504(a,b){var c=a*29+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn576564(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn026743(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn127246(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn587339(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn567214(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn960423(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn819207(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn699372(a,b){var c=a*6+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn892979(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn875301(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn441333(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn366377(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn087765(a,b){var c=a*67+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn056629(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn631538(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn106044(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn638377(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn526080(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn306043(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn941701(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn860064(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn613504(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn809818(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn863548(a,b){var c=a*6+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn804165(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn009153(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn433878(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn315645(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn507666(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn060848(a,b){var c=a*77+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn718017(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn026475(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn796268(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn024044(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn303550(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn678454(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn874956(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn563784(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn995786(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn122814(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn225966(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn560109(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn869135(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn086496(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn396418(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn241596(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn103885(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn232371(a,b){var c=a*77+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn381169(a,b){var c=a*18+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn694042(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn066920(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn088713(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn941421(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn427395(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn322611(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn509820(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn987780(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn932139(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn990926(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn328812(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn463627(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn715634(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn801856(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn004645(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn094607(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn545850(a,b){var c=a*63+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn499498(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn410672(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn735800(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn533569(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn752405(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn224977(a,b){var c=a*29+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn915728(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn945221(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn160400(a,b){var c=a*57+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn351260(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn942621(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn544706(a,b){var c=a*54+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn760458(a,b){var c=a*6+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn763741(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn300057(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn827039(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn629986(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn467120(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn340855(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn303240(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn280058(a,b){var c=a*71+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn094115(a,b){var c=a*33+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn868335(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn864508(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn752801(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn214951(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn076197(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn578782(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn313640(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn961694(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn066871(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn607357(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn070910(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn993266(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn653670(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn228516(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn150177(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn685284(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn461786(a,b){var c=a*11+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn382537(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn330195(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn580477(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn636504(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn125070(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn330732(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn356334(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn385979(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn637021(a,b){var c=a*27+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn000931(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn761021(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn475897(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn444617(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn892130(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn686739(a,b){var c=a*32+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn652941(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn134444(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn541923(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn548036(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn263294(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn066711(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn991138(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn124415(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn482923(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn158744(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn824415(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn617265(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn172461(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn014639(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn233627(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn341076(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn933548(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn828380(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn393492(a,b){var c=a*93+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn734631(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn818728(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn444154(a,b){var c=a*57+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn468357(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn618990(a,b){var c=a*25+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn344389(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn932760(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn973902(a,b){var c=a*75+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn472031(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn143380(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn873256(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn848633(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn514090(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn462723(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn343306(a,b){var c=a*63+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn092297(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn501096(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn250693(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn360649(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn435330(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn492582(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn787514(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn124457(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn811989(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn030201(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn198471(a,b){var c=a*32+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn704802(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn748051(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn515202(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn061759(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn677397(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn427873(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn913093(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn962489(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn906841(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn948403(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn029287(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn549442(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn795797(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn979252(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn502648(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn059754(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn636250(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn010703(a,b){var c=a*62+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn053881(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn666345(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn026772(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn842640(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn440485(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn069678(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn398744(a,b){var c=a*27+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn187615(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn831577(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn321274(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn111382(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn901876(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn636296(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn802240(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn051241(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn368274(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn744559(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn506320(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn925607(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn391360(a,b){var c=a*29+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn742418(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn175206(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn844908(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn549015(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn586298(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn638075(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn103017(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn665531(a,b){var c=a*94+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn203092(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn526031(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn311325(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn811679(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn203622(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn691136(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn212078(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn835028(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn112132(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn761804(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn250190(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn060596(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn177315(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn317342(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn294682(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn069932(a,b){var c=a*8+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn320952(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn210115(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn102605(a,b){var c=a*95+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn771659(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn040837(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn592538(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn198285(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn180162(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn946801(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn863738(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn527239(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn945078(a,b){var c=a*3+b;