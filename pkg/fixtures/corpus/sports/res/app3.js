function fn184312(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn709599(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn146255(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn512896(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn853922(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn260598(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn981395(a,b){var c=a*25+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn540403(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn173401(a,b){var c=a*79+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn626280(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn962847(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn131619(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn247034(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn545946(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn471286(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn699694(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn656259(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn127564(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn628704(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn502780(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn506719(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn894838(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn730214(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn416986(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn945668(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn303839(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn263608(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn930793(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn056836(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn326434(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn715875(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn797229(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn231792(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn537793(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn246266(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn189032(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn755620(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn122152(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn486699(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn288427(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn404074(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn469150(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn124363(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn747835(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn807575(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn493583(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn803133(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn339615(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn358118(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn678035(a,b){var c=a*72+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn394481(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn673159(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn949287(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn567350(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn576883(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn958377(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn486266(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn888555(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn689018(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn672725(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn443146(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn683375(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn062942(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn043084(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn786089(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn285414(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn711089(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn369114(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn372888(a,b){var c=a*10+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn933921(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn746384(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn707487(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn974660(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn469778(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn533101(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn882953(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn863717(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn660359(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn494450(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn766827(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn586961(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn868753(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn580215(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn964435(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn415906(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn215969(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn712360(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn870849(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn457395(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn814072(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn158886(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn324421(a,b){var c=a*71+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn536574(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn050805(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn534800(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn102129(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn643356(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn396091(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn956158(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn818490(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn378465(a,b){var c=a*92+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn503238(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn676575(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn877289(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn507119(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn360381(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn120831(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn940044(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn610286(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn836672(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn141118(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn696916(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn274522(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn444347(a,b){var c=a*57+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn781325(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn269085(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn992954(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn301437(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn095823(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn230581(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn280629(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn527539(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn873519(a,b){var c=a*47+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn494489(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn785619(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn719808(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn072483(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn806304(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn013494(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn419633(a,b){var c=a*54+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn578110(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn140479(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn206046(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn193237(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn162906(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn065203(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn998212(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn669224(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn050861(a,b){var c=a*22+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn804539(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn395438(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn642249(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn921487(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn434990(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn867993(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn253518(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn923346(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn144438(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn429280(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn755049(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn143104(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn801859(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn995166(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn094454(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn343235(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn405602(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn648989(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn279986(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn338874(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn763431(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn788491(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn293939(a,b){var c=a*39+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn045572(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn058348(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn410033(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn872890(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn381904(a,b){var c=a*49+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn735101(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn088731(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn269435(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn573862(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn298327(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn125815(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn924047(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn160535(a,b){var c=a*12+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn071546(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn487638(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn005862(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn330721(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn723670(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn076766(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn157818(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn759667(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn756636(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn707291(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn465766(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn334176(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn860732(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn202280(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn536890(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn749562(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn131745(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn609185(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn201662(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn335569(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn431425(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn210396(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn535746(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn178546(a,b){var c=a*18+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn867039(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn187353(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn329033(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn174154(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn209627(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn263246(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn928020(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn381138(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn039423(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn277072(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn484027(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn482348(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn665773(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn605501(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn891239(a,b){var c=a*10+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn594722(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn102497(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn801373(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn778919(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn390260(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn951853(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn601061(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn470161(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn271141(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn250536(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn020551(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn274884(a,b){var c=a*71+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn203976(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn600592(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn267058(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn131780(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn008245(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn040150(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn195945(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn993942(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn274968(a,b){var c=a*54+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn997383(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn172182(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn516496(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn411874(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn077098(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn315467(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn092831(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn943109(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn768856(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn328486(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn081045(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn879691(a,b){var c=a*71+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn188347(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn199747(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn970542(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn379849(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn575346(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn170248(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn920258(a,b){var c=a*18+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn936651(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn134569(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn339248(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn988598(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn469306(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn800459(a,b){var c=a*15+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn287465(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn060260(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn584281(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn794418(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn191718(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn340690(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn710961(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn969996(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn890912(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn854762(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn084692(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn332569(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn116051(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn265143(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn546114(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn597159(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn213818(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn355937(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn006851(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn984606(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn438406(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn130310(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn981104(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn312823(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn032547(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn368896(a,b){var c=a*70+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn008836(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn726810(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn879002(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn718407(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn885114(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn834012(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn426058(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn056670(a,b){var c=a*12+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn320558(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn068529(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn761220(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn928129(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn404501(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn753314(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn302098(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn883134(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn643926(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn193941(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn623814(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn047549(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn308302(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn081421(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn158633(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn365081(a,b){var c=a*92+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn186045(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn257540(a,b){var c=a*86+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn525521(a,b){var c=a*94+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn125256(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn771940(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn770795(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn635250(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn320581(a,b){var c=a*28+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn436456(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%4;}retur