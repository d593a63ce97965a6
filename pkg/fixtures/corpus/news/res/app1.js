function fn195618(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn841708(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn302835(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn081127(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn233371(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn759980(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn358177(a,b){var c=a*14+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn431196(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn394725(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn879494(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn527669(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn349198(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn783955(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn207615(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn606858(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn634091(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn656024(a,b){var c=a*37+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn280160(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn973554(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn875368(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn836777(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn121169(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn566199(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn543973(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn227293(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn401161(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn070274(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn438297(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn211012(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn091706(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn122485(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn382544(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn478314(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn821332(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn164125(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn461964(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn260324(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn431202(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn522181(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn602508(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn907725(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn435094(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn333138(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn135643(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn267848(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn596436(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn222114(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn738173(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn573941(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn986032(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn366565(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn956854(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn067624(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn209587(a,b){var c=a*97+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn624112(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn891435(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn122499(a,b){var c=a*59+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn956567(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn469834(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn041885(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn066716(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn928125(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn043675(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn681869(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn591147(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn054120(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn598180(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn609461(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn534856(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn325665(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn464699(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn626060(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn290080(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn760096(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn225736(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn199081(a,b){var c=a*55+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn487524(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn067058(a,b){var c=a*22+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn643335(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn338360(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn685002(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn990617(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn006592(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn756355(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn512747(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn868835(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn938233(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn497804(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn920249(a,b){var c=a*22+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn677206(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn599131(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn202979(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn446365(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn796945(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn039403(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn945842(a,b){var c=a*32+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn963923(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn575741(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn083327(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn617295(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn568137(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn028812(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn716249(a,b){var c=a*49+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn004889(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn678326(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn463569(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn220935(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn161973(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn821047(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn667782(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn221637(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn196763(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn088816(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn826359(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn114595(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn473491(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn776485(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn045258(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn833057(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn125479(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn424595(a,b){var c=a*66+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn132574(a,b){var c=a*25+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn603180(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn229010(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn634237(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn146489(a,b){var c=a*63+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn802817(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn159410(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn613519(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn200329(a,b){var c=a*65+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn127519(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn461797(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn594574(a,b){var c=a*23+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn886113(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn745273(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn873666(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn165228(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn445300(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn631624(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn553968(a,b){var c=a*70+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn604664(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn248952(a,b){var c=a*18+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn167696(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn641127(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn844030(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn434492(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn493355(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn553805(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn916026(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn679873(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn326496(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn156426(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn094740(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn988412(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn649040(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn422202(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn557074(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn289356(a,b){var c=a*13+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn662921(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn174059(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn494095(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn566988(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn818066(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn882393(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn900153(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn405956(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn593815(a,b){var c=a*74+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn818340(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn238286(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn112917(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn394072(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn254368(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn958057(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn312417(a,b){var c=a*84+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn433999(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn735451(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn668977(a,b){var c=a*55+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn920106(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn291227(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn491404(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn166559(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn173503(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn027816(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn843738(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn189895(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn873888(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn473341(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn574265(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn232332(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn872833(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn490805(a,b){var c=a*97+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn542272(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn652340(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn042618(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn506023(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn589557(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn003933(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn864477(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn857140(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn346733(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn025805(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn820413(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn679671(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn991008(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn576374(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn492005(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn275146(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn700814(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn405502(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn508228(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn949680(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn632799(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn836209(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn312127(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn759885(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn030057(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn194253(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn453633(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn561692(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn303993(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn083357(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn650693(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn311255(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn875136(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn255219(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn885186(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn289686(a,b){var c=a*54+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn149687(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn847378(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn449872(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn311857(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn090542(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn753540(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn668002(a,b){var c=a*71+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn536307(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn937385(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn544342(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn365690(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn270186(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn267778(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn037394(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn708766(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn399920(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn000521(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn765824(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn216568(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn713458(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn496353(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn807229(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn401825(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn313983(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn508468(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn351127(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn051844(a,b){var c=a*68+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn293735(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn999819(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn034933(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn461798(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn039930(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn552289(a,b){var c=a*76+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn779875(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn462983(a,b){var c=a*57+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn810898(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn616042(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn932481(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn813862(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn943868(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn423168(a,b){var c=a*81+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn879913(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn628519(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn832676(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn096398(a,b){var c=a*63+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn945974(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn493807(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn228701(a,b){var c=a*21+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn196746(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn458745(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn988693(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn279511(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn969563(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn325627(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn299798(a,b){var c=a*63+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn350779(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn612524(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn505043(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn558144(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn557055(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn298457(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn579857(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn908684(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn857516(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn138145(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn612791(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn877662(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn415510(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn085449(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn951889(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn714351(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn872872(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn872247(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn381880(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn128190(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn271098(a,b){var c=a*28+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn144889(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn849493(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn972368(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn967464(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn321915(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn004883(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn944719(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn303558(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn425207(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn039146(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn690869(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn101497(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn541953(a,b){var c=a*18+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn122710(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn295602(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn368453(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn531340(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn618225(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn986402(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn073149(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn349573(a,b){var c=a*47+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn317078(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn544164(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn385182(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn637722(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn045383(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn975283(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn536180(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn925533(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn162546(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn126491(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn332843(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn176021(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn477287(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn516099(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn597163(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn596222(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn627124(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn408043(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn138272(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn443752(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn668540(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn918572(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn848484(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn254864(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn887048(a,b){var c=a*77+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn475028(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn922229(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn877368(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn778610(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn261132(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn214420(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn948813(a,b){var c=a*22+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn515541(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn677992(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn436620(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn249535(a,b){var c=a*37+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn985804(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn057413(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn111684(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn308448(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn179584(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn443205(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn703761(a,b){var c=a*43+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn523990(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn907340(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn327362(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn057116(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn785419(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn869868(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn319678(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn686825(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn428895(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn753848(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn931766(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn915759(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn743888(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn210568(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn499937(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn691320(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn348951(a,b){var c=a*35+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn012499(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn389524(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn414190(a,b){var c=a*33+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn851451(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn661050(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn632345(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn977273(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn776973(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn974287(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn466358(a,b){var c=a*45+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn887492(a,b){var c=a*69+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn037568(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn277118(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn321775(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn528096(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn147780(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn652293(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn179978(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn271403(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn270734(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn567197(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn751789(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn545073(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn813984(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn426153(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn376438(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn551250(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn326933(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn069822(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn571233(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn955869(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn241622(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn108903(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn796895(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn889143(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn666434(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn129083(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn500232(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn196104(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn551908(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn935121(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn571830(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn863850(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn176996(a,b){var c=a*10+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn331841(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn903001(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn710235(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn627260(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn827634(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn654985(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn310529(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn896759(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn342406(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn361329(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn719761(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn941697(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn661105(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn871756(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn209315(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn562403(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn675948(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn247251(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn613873(a,b){var c=a*77+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn795511(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn883699(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn979455(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn747956(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn657894(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn752143(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn201686(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn841616(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn772482(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn803203(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn018540(a,b){var c=a*45+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn728471(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn345490(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn009524(a,b){var c=a*78+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn982808(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn021279(a,b){var c=a*84+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn286956(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn537255(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn875892(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn749013(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn110401(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn325500(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn795412(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn900384(a,b){var c=a*21+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn840160(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn092399(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn245977(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn649050(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn655515(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn516926(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn238088(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn898317(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn041839(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn428113(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn829656(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn692683(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn319134(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn122796(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn972200(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn702559(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn417736(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn838129(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn501923(a,b){var c=a*51+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn882990(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn892076(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn238770(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn423036(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn592087(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn756319(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn160006(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn814777(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn643178(a,b){var c=a*11+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn623607(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn139951(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn208257(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn194480(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn141676(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn927080(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn023409(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn621310(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn590135(a,b){var c=a*65+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn562559(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn050160(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn598053(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn552313(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn476935(a,b){var c=a*75+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn851841(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn110895(a,b){var c=a*3+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn204191(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn788074(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn254681(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn358030(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn809043(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn987867(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn490344(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn829491(a,b){var c=a*57+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn521250(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn080677(a,b){var c=a*3+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn042357(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn953339(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn597326(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn049946(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn006021(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn325896(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn830369(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn217005(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn256918(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn239783(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn365581(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn031007(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn811534(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn622762(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn573559(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn423903(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn684453(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn069897(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn225350(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn912146(a,b){var c=a*10+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn275396(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn831596(a,b){var c=a*5+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn621891(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn639119(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn765192(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn008074(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn711729(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn597483(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn313788(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn035127(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn975346(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn249218(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn604134(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn110826(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn406381(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn334107(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn191820(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn785472(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn716923(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn739875(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn384624(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn898172(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn298786(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn479556(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn696174(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn207769(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn216066(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn933214(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn807680(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn971207(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn981420(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn975772(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn301760(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn900036(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn567776(a,b){var c=a*20+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn144696(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn779248(a,b){var c=a*14+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn799573(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn257986(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn838228(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn863172(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn325357(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn335558(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn646191(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn033968(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn752201(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn889577(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn383930(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn708204(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn899656(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn405354(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn398941(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn390112(a,b){var c=a*63+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn372044(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn110819(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn096278(a,b){var c=a*2+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn386894(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn204977(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn522789(a,b){var c=a*73+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn737320(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn327516(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn609250(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn286427(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn715167(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn497882(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn631401(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn437035(a,b){var c=a*39+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn502391(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn831748(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn696909(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn934807(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn266389(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn366192(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn737029(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn667582(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn362905(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn630196(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn747013(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn116602(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn382786(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn790683(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn386408(a,b){var c=a*30+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn550779(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn904847(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn582045(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn599662(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn244230(a,b){var c=a*71+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn163785(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn239943(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn717252(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn338995(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn857523(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn409754(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn814046(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn189734(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn455516(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn283541(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn609234(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn777787(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn500064(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn375264(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn373590(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn093154(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn951143(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn455335(a,b){var c=a*81+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn725572(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn969052(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn325149(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn412251(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn977869(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn097145(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn350344(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn030138(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn878908(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn464281(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn094100(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn974406(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn968427(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn655418(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn256855(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn907810(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn137765(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn925259(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn586946(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn104832(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn829471(a,b){var c=a*14+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn163751(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn474809(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn134320(a,b){var c=a*95+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn157393(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn618935(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn656431(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn317720(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn558941(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn059145(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn981564(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn172159(a,b){var c=a*22+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn139533(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn037304(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn557883(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn294582(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn010153(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn739358(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn933636(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn764169(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn922472(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn664536(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn994044(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn531680(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn788671(a,b){var c=a*4+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn870775(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn904651(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn033029(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn565297(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn093291(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn157261(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn620256(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn384962(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn543159(a,b){var c=a*79+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn083731(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn272419(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn997301(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn699728(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn938404(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn387542(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn192051(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn995629(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn049198(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn695715(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn185667(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn670384(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn292945(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn855002(a,b){var c=a*90+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn735428(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn787466(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn378478(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn897799(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn745963(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn823736(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn889794(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn213930(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn655847(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn092780(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn389092(a,b){var c=a*94+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn638295(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn551371(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn631758(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn028050(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn458289(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn304908(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn507804(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn658854(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn738124(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn361609(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn206388(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn114784(a,b){var c=a*77+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn219948(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn831929(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn801589(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn517366(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn689495(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn054758(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn601619(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn614616(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn558074(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn972491(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn169955(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn310847(a,b){var c=a*43+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn894025(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn145459(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn476018(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn227485(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn944575(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn146488(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn942677(a,b){var c=a*10+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn425346(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn982528(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn996318(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn914488(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn410675(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn732805(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn078317(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn022216(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn074572(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn707738(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn605102(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn622113(a,b){var c=a*10+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn934914(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn642068(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn365238(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn325882(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn090975(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn574903(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn669232(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn364413(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn990847(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn268382(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn410466(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn940777(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn887304(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn380809(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn628253(a,b){var c=a*80+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn996441(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn851738(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn025397(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn763412(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn295728(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn353467(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn083296(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn604195(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn662338(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn495243(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn870009(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn735653(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn790563(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn240794(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn904175(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn882463(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn441157(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn983937(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn059411(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn209884(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn099118(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn274526(a,b){var c=a*16+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn535188(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn920994(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn727147(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn042684(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn882659(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn213267(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn624587(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn000880(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn245971(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn131971(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn575201(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn252880(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn836740(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn471533(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn590391(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn655483(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn142282(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn363269(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn234473(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn220264(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn144792(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn158314(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn512437(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn770411(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn224840(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn729854(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn224739(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn081148(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn860345(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn278188(a,b){var c=a*91+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn614393(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn661498(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn082141(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn783116(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn624668(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn173462(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn238896(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn801639(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn152343(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn641034(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn000601(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn679087(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn631935(a,b){var c=a*41+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn717741(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn444308(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn686851(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn054456(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn151516(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn775962(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn060993(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn165157(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn812524(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn048726(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn832938(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn072068(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn828923(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn071957(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn501866(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn615914(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn793375(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn186739(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn536492(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn912692(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn632900(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn554878(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn064714(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn852971(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn390948(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn750326(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn203321(a,b){var c=a*53+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn255308(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn036111(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn312850(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn412497(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn976246(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn421445(a,b){var c=a*56+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn471133(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn844909(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn337302(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn261673(a,b){var c=a*31+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn379199(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn819678(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn553327(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn341989(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn605816(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn321715(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn230647(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn109578(a,b){var c=a*19+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn991847(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn034233(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn061380(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn682812(a,b){var c=a*55+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn868718(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn126022(a,b){var c=a*64+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn778030(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn108929(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn956875(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn266226(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn393809(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn046709(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn930066(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn930600(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn866168(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn218287(a,b){var c=a*47+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn383553(a,b){var c=a*67+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn426438(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn868507(a,b){var c=a*34+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn880856(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn517476(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn758485(a,b){var c=a*34+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn624268(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn014415(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn443158(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn083738(a,b){var c=a*25+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn144695(a,b){var c=a*20+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn013617(a,b){var c=a*2+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn303229(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn494485(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn183600(a,b){var c=a*51+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn822014(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn791681(a,b){var c=a*3+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn881164(a,b){var c=a*58+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn036282(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn895662(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn115739(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn896818(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn772458(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn432744(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn313939(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn813969(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn170620(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn802583(a,b){var c=a*54+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn005485(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn921223(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn099951(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn478676(a,b){var c=a*29+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn202744(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn720034(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn294644(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn016136(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn190357(a,b){var c=a*67+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn629960(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn806822(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn346204(a,b){var c=a*30+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn744032(a,b){var c=a*16+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn303934(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn012281(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn412226(a,b){var c=a*46+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn963425(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn440284(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn638492(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn814375(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn972704(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn906567(a,b){var c=a*94+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn654414(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn961180(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn407483(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn109148(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn469246(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn059379(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn170658(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn321433(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn178423(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn994312(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn176764(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn684604(a,b){var c=a*50+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn443809(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn224666(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn988285(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn068934(a,b){var c=a*23+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn537545(a,b){var c=a*63+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn538010(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn094511(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn714532(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn710621(a,b){var c=a*35+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn869447(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn486147(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn758555(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn105363(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn694123(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn510424(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn906530(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn149619(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn556706(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn083764(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn810981(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn152663(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn298181(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn347880(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn729839(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn720720(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn002238(a,b){var c=a*59+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn859633(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn398456(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn572095(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn525229(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn211846(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn778619(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn313085(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn725776(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn048158(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn420818(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn343186(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn500118(a,b){var c=a*54+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn202875(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn804576(a,b){var c=a*60+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn499999(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn170934(a,b){var c=a*94+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn455532(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn777725(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn554415(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn936821(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn566134(a,b){var c=a*67+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn725308(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn153528(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn152217(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn979534(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn616184(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn577704(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn860697(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn782430(a,b){var c=a*41+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn845309(a,b){var c=a*8+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn726919(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn775315(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn368465(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn046266(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn109290(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn670575(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn782586(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn464629(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn893375(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn841461(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn079380(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn965267(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn426664(a,b){var c=a*18+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn517577(a,b){var c=a*5+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn134751(a,b){var c=a*6+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn497845(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn045831(a,b){var c=a*29+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn810381(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn798724(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn708281(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn556801(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn738837(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn248261(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn112598(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn742573(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn536062(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn674436(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn322579(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn353011(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn958560(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn086855(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn346750(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn157130(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn606751(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn083088(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn123336(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn925312(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn753149(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn767623(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn712569(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn035773(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn434761(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn468781(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn956504(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn805189(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn553849(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn849183(a,b){var c=a*44+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn748335(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn706025(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn140884(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn074817(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn618176(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn320466(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn760404(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn354911(a,b){var c=a*46+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn711485(a,b){var c=a*55+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn239790(a,b){var c=a*91+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn164119(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn854346(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn988207(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn625146(a,b){var c=a*91+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn641576(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn650163(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn042330(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn695661(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn254655(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn445268(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn941672(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn759991(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn443825(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn225743(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn102033(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn074014(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn343046(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn293383(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn424488(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn847876(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn413599(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn251846(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn728725(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn117698(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn255920(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn856334(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn531964(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn850020(a,b){var c=a*35+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn996648(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn430750(a,b){var c=a*14+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn488040(a,b){var c=a*83+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn756231(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn805258(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn052656(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn177025(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn648557(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn599509(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn941731(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn039035(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn562790(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn367914(a,b){var c=a*50+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn266870(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn008149(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn656582(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn466860(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn031808(a,b){var c=a*30+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn606071(a,b){var c=a*58+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn679589(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn332218(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn639462(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn056261(a,b){var c=a*18+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn797866(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn128945(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn085149(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn498126(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn039913(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn031096(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn968247(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn772160(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn077684(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn266303(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn372419(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn945552(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn414486(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn340346(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn561331(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn618150(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn293286(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn810530(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn300029(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn432794(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn458418(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn225834(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn042089(a,b){var c=a*50+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn440017(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn484019(a,b){var c=a*57+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn484255(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn278609(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn456728(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn025622(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn671501(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn551445(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn873191(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn194426(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn089353(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn084914(a,b){var c=a*78+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn468134(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn800920(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn770845(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn445966(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn451857(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn907354(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn948666(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn325952(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn513260(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn266807(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn649853(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn066795(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn837761(a,b){var c=a*21+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn773017(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn331566(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn982255(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn917607(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn294088(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn463907(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn234656(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn533808(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn196015(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn698948(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn489261(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn177086(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn817657(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn312411(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn925482(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn244339(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn729873(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn402722(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn115339(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn978599(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn893990(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn009824(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn754837(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn340772(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn768864(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn063884(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn759515(a,b){var c=a*92+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn618520(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn485106(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn241903(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn923693(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn505356(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn779647(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn092052(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn732541(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn197011(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn950562(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn204309(a,b){var c=a*18+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn024157(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn115715(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn057886(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn124145(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn723119(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn084279(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn495219(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn286027(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn202631(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn585785(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn058042(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn528779(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn313869(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn483013(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn532377(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn573358(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn241798(a,b){var c=a*58+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn853787(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn425060(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn391005(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn748717(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn107599(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn813179(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn212237(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn818856(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn809441(a,b){var c=a*76+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn434402(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn685000(a,b){var c=a*46+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn881892(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn050722(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn899785(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn712171(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn303402(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn772611(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn291811(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn976332(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn787313(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn171683(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn455506(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn362058(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn745794(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn234627(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn242579(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn316338(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn853701(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn479434(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn906966(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn719960(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn374066(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn154633(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn184971(a,b){var c=a*52+b;for(var i=