function fn899770(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn309470(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn563008(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn961486(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn787879(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn802423(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn700537(a,b){var c=a*42+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn456015(a,b){var c=a*67+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn846602(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn727809(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn689125(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn685110(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn579538(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn268257(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn234678(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn510412(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn588478(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn588991(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn541029(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn572937(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn045489(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn039757(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn366137(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn364405(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn970728(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn964708(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn163736(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn500872(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn074989(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn890909(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn196426(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn729040(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn828877(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn632182(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn076401(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn782902(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn596478(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn769064(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn065595(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn792235(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn990761(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn006981(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn156257(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn520227(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn744155(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn311587(a,b){var c=a*71+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn957027(a,b){var c=a*57+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn445420(a,b){var c=a*87+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn440112(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn972884(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn732391(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn610948(a,b){var c=a*64+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn825863(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn971491(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn402375(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn307102(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn936647(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn859136(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn002698(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn035778(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn037063(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn323086(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn442975(a,b){var c=a*69+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn045059(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn966496(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn097630(a,b){var c=a*34+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn629786(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn319598(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn661609(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn531703(a,b){var c=a*95+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn300636(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn470140(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn495834(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn069536(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn555918(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn822073(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn307278(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn171349(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn244722(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn576490(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn005013(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn184908(a,b){var c=a*96+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn390730(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn794072(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn085672(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn153853(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn271006(a,b){var c=a*71+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn994330(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn328835(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn684650(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn705091(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn900960(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn555346(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn433510(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn288584(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn456076(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn621282(a,b){var c=a*60+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn842807(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn231463(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn994069(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn175582(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn398608(a,b){var c=a*50+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn093582(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn407314(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn526139(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn334918(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn754197(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn481519(a,b){var c=a*11+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn069831(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn918552(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn953617(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn957670(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn949444(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn922187(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn807495(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn674283(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn035261(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn054884(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn334551(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn933077(a,b){var c=a*97+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn111167(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn398163(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn163816(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn196782(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn171443(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn754887(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn867877(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn256795(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn667167(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn996020(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn448326(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn645250(a,b){var c=a*68+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn840712(a,b){var c=a*64+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn397951(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn027540(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn597545(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn503570(a,b){var c=a*95+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn441363(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn752621(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn351147(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn985210(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn795136(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn813717(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn830343(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn791420(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn168586(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn592300(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn703286(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn491891(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn607167(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn675759(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn781454(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn315555(a,b){var c=a*7+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn365748(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn426567(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn734963(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn759831(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn583708(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn607063(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn011589(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn869505(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn603735(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn837972(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn056541(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn875067(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn475067(a,b){var c=a*57+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn524549(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn381624(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn875193(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn546639(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn972935(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn888325(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn112110(a,b){var c=a*64+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn791448(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn922575(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn331183(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn650303(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn182163(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn035524(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn675285(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn377123(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn843062(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn949306(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn469119(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn883620(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn726141(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn058156(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn244372(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn282850(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn031489(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn062059(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn328382(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn332352(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn767255(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn729924(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn558584(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn956666(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn482604(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn390179(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn635543(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn998629(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn109067(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn629226(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn211710(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn346739(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn163510(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn387567(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn408043(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn671951(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn525969(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn075204(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn859866(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn413309(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn503549(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn028302(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn016906(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn675756(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn109494(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn136293(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn812740(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn128262(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn246491(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn382728(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn077170(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn672775(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn125778(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn160189(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn699502(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn853637(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn552316(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn987291(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn586709(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn021674(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn576994(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn382070(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn071759(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn761405(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn387967(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn956427(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn429398(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn669612(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn556239(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn060342(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn179970(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn247281(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn518536(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn507692(a,b){var c=a*86+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn140413(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn920452(a,b){var c=a*97+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn008657(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn808334(a,b){var c=a*29+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn621457(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn038985(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn516339(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn430972(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn629324(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn115524(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn964408(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn241559(a,b){var c=a*96+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn681919(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn223637(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn952166(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn745224(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn476017(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn591469(a,b){var c=a*28+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn347063(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn323396(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn622693(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn534344(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn719408(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn730136(a,b){var c=a*67+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn215962(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn954921(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn022479(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn091529(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn004068(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn136241(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn956562(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn105344(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn526756(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn885508(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn025849(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn374972(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn914846(a,b){var c=a*58+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn233678(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn232662(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn052131(a,b){var c=a*12+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn875749(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn665358(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn172256(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn762479(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn184422(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn340206(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn671900(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn499220(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn872857(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn382862(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn971567(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn269169(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn670052(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn130821(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn655046(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn404358(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn801566(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn557618(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn742726(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn510378(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn840804(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn095697(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn472998(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn506793(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn663702(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn847826(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn299190(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn304454(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn227838(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn245139(a,b){var c=a*37+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn006926(a,b){var c=a*6+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn033360(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn372935(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn461188(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn722955(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn825710(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn969021(a,b){var c=a*47+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn778778(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn042926(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn427122(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn015581(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn814213(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn215003(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn263248(a,b){var c=a*56+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn575143(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn178682(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn531900(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn396300(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn457277(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn656273(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn027417(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn732984(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn678803(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn912604(a,b){var c=a*16+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn593290(a,b){var c=a*66+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn695271(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn876140(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn566885(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn933442(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn383477(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn267922(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn469622(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn349496(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn621681(a,b){var c=a*88+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn770112(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn949145(a,b){var c=a*61+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn619400(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn621251(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn541096(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn229215(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn852001(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn311509(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn833977(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn200972(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn601915(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn224580(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn864260(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn052323(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn099823(a,b){var c=a*39+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn005756(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn934699(a,b){var c=a*53+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn499680(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn053673(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn748784(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn636520(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn844208(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn866415(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn033757(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn840866(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn027467(a,b){var c=a*4+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn690366(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn789955(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn952162(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn994304(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn879272(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn947202(a,b){var c=a*6+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn388507(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn238036(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn355308(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn872477(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn236810(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn343103(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn313179(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn913648(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn782669(a,b){var c=a*63+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn256922(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn044737(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn294819(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn875602(a,b){var c=a*70+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn290664(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn612283(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn193495(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn496568(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn518406(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn447303(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn188906(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn084627(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn336216(a,b){var c=a*15+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn181885(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn280587(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn609446(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn311587(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn621781(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn331880(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn254458(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn882426(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn908104(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn828194(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn867105(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn700160(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn236075(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn219616(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn728781(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn590399(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn253933(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn862787(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn970238(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn894922(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn141050(a,b){var c=a*4+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn504467(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn219975(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn069367(a,b){var c=a*84+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn822378(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn795495(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn067092(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn035086(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn571304(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn929847(a,b){var c=a*94+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn820342(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn564685(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn635875(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn831968(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn634269(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn210687(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn437932(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn182257(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn390987(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn642421(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn367006(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn207391(a,b){var c=a*48+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn253117(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn193978(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn261733(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn774427(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn214354(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%10