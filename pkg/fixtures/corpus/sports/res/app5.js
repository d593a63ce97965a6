function fn006666(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn621144(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn249413(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn553703(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn530914(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn492463(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn466172(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn561175(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn748663(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn775223(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn571108(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn996792(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn601603(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn581437(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn089734(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn088429(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn711223(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn520820(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn395403(a,b){var c=a*85+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn448754(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn988289(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn254739(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn051757(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn918913(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn527226(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn366625(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn922710(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn707091(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn114997(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn163062(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn707545(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn583196(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn426139(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn873014(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn537038(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn878000(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn913818(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn238294(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn936457(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn892321(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn477170(a,b){var c=a*65+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn808829(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn792275(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn506584(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn833844(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn060605(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn757173(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn315239(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn627763(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn998879(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn770557(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn508480(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn812290(a,b){var c=a*79+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn153154(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn673166(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn661211(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn399504(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn623295(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn087848(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn976251(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn712557(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn091258(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn076042(a,b){var c=a*35+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn545149(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn035522(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn753525(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn609076(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn646900(a,b){var c=a*3+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn831165(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn842077(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn013284(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn407340(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn000465(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn652180(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn599021(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn170357(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn217133(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn124719(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn777172(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn661944(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn680383(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn110921(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn210026(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn098718(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn104264(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn019242(a,b){var c=a*47+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn766997(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn526787(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn901181(a,b){var c=a*12+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn630401(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn300429(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn689970(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn056377(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn264706(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn507394(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn347697(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn084501(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn685586(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn854681(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn738839(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn398803(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn688969(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn432282(a,b){var c=a*50+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn466714(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn406593(a,b){var c=a*72+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn231734(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn749467(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn898933(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn728245(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn900865(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn440722(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn824975(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn851176(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn267835(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn433619(a,b){var c=a*23+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn744488(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn643363(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn679984(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn805872(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn248119(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn092308(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn930507(a,b){var c=a*43+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn702160(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn140104(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn103089(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn927747(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn980802(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn900237(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn898334(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn274303(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn335114(a,b){var c=a*74+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn038865(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn853962(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn377569(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn044478(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn856070(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn352582(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn847880(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn353199(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn177550(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn671395(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn284389(a,b){var c=a*55+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn242066(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn684121(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn439064(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn896592(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn263974(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn103909(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn166053(a,b){var c=a*69+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn265080(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn778641(a,b){var c=a*12+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn097584(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn373972(a,b){var c=a*65+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn472055(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn860076(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn604687(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn514743(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn933202(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn601723(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn820058(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn454709(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn909895(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn468850(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn762522(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn179364(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn180737(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn426284(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn749235(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn393470(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn999920(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn255067(a,b){var c=a*23+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn646469(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn974348(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn005431(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn460190(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn605387(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn879267(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn874838(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn265886(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn258643(a,b){var c=a*63+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn271108(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn550757(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn795640(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn441105(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn302760(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn408827(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%4;}ret