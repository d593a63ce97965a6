function fn254028(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn842641(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn361405(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn618469(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn358046(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn003059(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn903943(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn850032(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn080885(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn108264(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn218487(a,b){var c=a*28+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn025245(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn110595(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn980103(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn907235(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn980177(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn589407(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn938425(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn646644(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn231344(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn070197(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn778168(a,b){var c=a*97+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn680690(a,b){var c=a*11+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn227877(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn452937(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn944064(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn295455(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn393889(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn230206(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn001451(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn860849(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn772821(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn869206(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn572473(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn050481(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn459881(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn893445(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn942897(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn648911(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn934546(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn824317(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn689500(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn590963(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn367648(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn858378(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn210040(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn005730(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn620711(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn422993(a,b){var c=a*46+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn164426(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn739521(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn583671(a,b){var c=a*39+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn665455(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn735058(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn069598(a,b){var c=a*50+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn850574(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn591026(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn688044(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn496869(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn430159(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn111161(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn106668(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn256308(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn225438(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn671503(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn635741(a,b){var c=a*77+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn084183(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn523254(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn688482(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn024470(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn272324(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn524609(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn401982(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn534408(a,b){var c=a*58+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn388209(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn449651(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn939479(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn768825(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn424606(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn484368(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn138135(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn511010(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn511119(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn627206(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn405516(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn452877(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn358584(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn125079(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn221274(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn854146(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn745157(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn247191(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn572422(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn938359(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn122502(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn313142(a,b){var c=a*4+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn439873(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn874222(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn629525(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn963726(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn812021(a,b){var c=a*44+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn533710(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn143604(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn579258(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn857076(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn350073(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn098097(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn159629(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn092160(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn025406(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn045169(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn670250(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn804498(a,b){var c=a*45+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn821320(a,b){var c=a*35+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn205289(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn501014(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn184206(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn001753(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn591884(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn774880(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn999351(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn245808(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn023780(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn538199(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn384810(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn481259(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn332390(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn904072(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn015468(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn327939(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn488364(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn286405(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn475005(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn213396(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn852407(a,b){var c=a*17+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn387483(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn830888(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn882739(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn025093(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn060245(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn130472(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn597225(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn808794(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn749007(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn352990(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn331317(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn823176(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn935346(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn246360(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn693551(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn468693(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn278953(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn820124(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn260894(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn579902(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn820583(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn456750(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn743731(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn430381(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn434964(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn130199(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn759113(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn083311(a,b){var c=a*64+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn312608(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn775333(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn843780(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn253862(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn436632(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn019295(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn722156(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn118709(a,b){var c=a*95+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn775263(a,b){var c=a*13+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn546714(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn021348(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn652309(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn417873(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn628309(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn025032(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn282175(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn976936(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn131796(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn596916(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn088986(a,b){var c=a*60+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn519772(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn886785(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn438128(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn403794(a,b){var c=a*42+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn424301(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn544482(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn062424(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn276918(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn008462(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn749063(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn878511(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn752093(a,b){var c=a*97+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn420307(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn974357(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn217487(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn371871(a,b){var c=a*57+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn379023(a,b){var c=a*19+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn852623(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn068457(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn966127(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn845455(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn001274(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn570633(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn355975(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn648692(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn772241(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn863435(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn932205(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn965008(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn355958(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn591907(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn710500(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn690767(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn637712(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn460179(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn708163(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn414865(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn664359(a,b){var c=a*22+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn109957(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn405125(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn128435(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn937469(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn178826(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn986675(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn017066(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn500278(a,b){var c=a*29+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn749440(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn772619(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn818671(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn059030(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn148784(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn944395(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn602455(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn709845(a,b){var c=a*39+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn222537(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn659961(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn031117(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn315070(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn046526(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn651164(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn050500(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn617954(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn267654(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn558981(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn663837(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn060945(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn261997(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn395836(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn592295(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn420438(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn293723(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn721385(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn159520(a,b){var c=a*37+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn774518(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn735576(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn084436(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn917883(a,b){var c=a*15+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn458372(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn357413(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn740286(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn928258(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn393443(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn869267(a,b){var c=a*84+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn218078(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn963702(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn960196(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn230548(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn211144(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn333190(a,b){var c=a*58+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn719718(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn641768(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn060492(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn632152(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn901605(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn713285(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn065972(a,b){var c=a*22+b;for(var i=0;i<39;i++){c