function fn344201(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn089560(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn799731(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn574335(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn892532(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn785725(a,b){var c=a*49+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn581488(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn993329(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn225234(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn170435(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn648234(a,b){var c=a*9+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn598133(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn642334(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn009854(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn645680(a,b){var c=a*39+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn976176(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn683711(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn482219(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn284368(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn194593(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn560846(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn777456(a,b){var c=a*38+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn747249(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn143439(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn346519(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn270623(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn915415(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn696325(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn119412(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn051756(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn157781(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn625095(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn019512(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn839947(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn855723(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn628761(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn844970(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn957614(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn088501(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn768775(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn105485(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn295854(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn665289(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn011030(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn133163(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn073835(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn213833(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn220323(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn427182(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn744562(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn763471(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn513604(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn280001(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn982499(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn515387(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn351533(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn524585(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn614429(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn220817(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn604764(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn607778(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn419380(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn806397(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn729690(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn904208(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn775225(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn497737(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn681011(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn168094(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn599770(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn391467(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn005332(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn524730(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn931450(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn251106(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn071704(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn751746(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn249907(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn473111(a,b){var c=a*47+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn971509(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn869647(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn592412(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn581340(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn067586(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn429545(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn426749(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn342798(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn562008(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn092175(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn516172(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn181346(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn272114(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn482500(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn285003(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn177900(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn018344(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn701015(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn767412(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn292877(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn769245(a,b){var c=a*64+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn873163(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn033118(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn539159(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn860407(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn588492(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn820048(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn639453(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn031297(a,b){var c=a*15+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn051746(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn148064(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn031466(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn139352(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn827110(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn760564(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn822538(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn421578(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn592488(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn391695(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn971301(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn882538(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn530722(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn557841(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn461814(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn024576(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn314196(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn136596(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn321163(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn049242(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn659231(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn578458(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn297594(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn562424(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn376852(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn937049(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn488451(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn789451(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn406316(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn479522(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn736791(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn549913(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn389317(a,b){var c=a*30+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn536260(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn059611(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn863618(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn280818(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn452282(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn300347(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn448012(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn225097(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn431297(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn027843(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn528716(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn299526(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn213452(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn483712(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn901252(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn774180(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn429132(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn656499(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn270811(a,b){var c=a*4+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn022837(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn643785(a,b){var c=a*72+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn731507(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn660086(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn202727(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn232022(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn874356(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn012379(a,b){var c=a*43+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn742018(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn798046(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn971030(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn818612(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn482979(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn223230(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn695203(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn997082(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn492193(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn535638(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn077089(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn854226(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn657427(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn897816(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn703035(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn791316(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn670696(a,b){var c=a*56+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn839301(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn623392(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn258625(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn319363(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn184482(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn502463(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn847604(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn673183(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn926612(a,b){var c=a*27+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn567854(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn478653(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn584019(a,b){var c=a*59+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn654507(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn656899(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn092352(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn429186(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn288103(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn148056(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn938130(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn602779(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn709441(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn211556(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn239358(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn281819(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn024339(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn046316(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn621768(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn772472(a,b){var c=a*57+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn530302(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn035067(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn550752(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn927470(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn535232(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn728118(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn608980(a,b){var c=a*5+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn808270(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn148578(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn665635(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn736245(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn450538(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn724021(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn415669(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn642935(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn498547(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn490474(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn459550(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn075142(a,b){var c=a*46+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn094660(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn848581(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn840603(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn133256(a,b){var c=a*48+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn682848(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn008856(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn464594(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn582732(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn213421(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn987430(a,b){var c=a*14+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn495921(a,b){var c=a*33+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn730664(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn005111(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn071473(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn112739(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn708639(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn948367(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn430105(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn691530(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn269488(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn279902(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn253138(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn591408(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn916485(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn948448(a,b){var c=a*25+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn172146(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn887533(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn081468(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn541982(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn364670(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn308241(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn838141(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn307202(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn686978(a,b){var c=a*47+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn295241(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn886021(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn397685(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn205489(a,b){var c=a*55+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn521220(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn091503(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn683966(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn227257(a,b){var c=a*96+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn425969(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn315669(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn654132(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn449537(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn944657(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn607833(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn194157(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn473365(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn301678(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn805250(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn980306(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn847531(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn202097(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn000795(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn926878(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn501087(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn563282(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn559609(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn345875(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn842032(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn445452(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn999930(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn205327(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn383839(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn891369(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn177078(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn135186(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn862120(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn432035(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn007272(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn165152(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn196033(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn806368(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn957159(a,b){var c=a*53+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn616041(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn079108(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn307194(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn233458(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn476692(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn718051(a,b){var c=a*74+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn822079(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn163195(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn183242(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn019891(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn932654(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn413073(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn974173(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn574425(a,b){var c=a*40+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn089201(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn408675(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn819691(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn884997(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn205112(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn309865(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn445905(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn133086(a,b){var c=a*69+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn029286(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn034585(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn431540(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn721192(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn427696(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn403189(a,b){var c=a*2+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn201581(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn539545(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn205314(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn132532(a,b){var c=a*84+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn866002(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn962947(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn237820(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn455481(a,b){var c=a*84+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn266409(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn199660(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn976510(a,b){var c=a*97+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn526945(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn709691(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn500248(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn057674(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn005677(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn912361(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn450144(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn394064(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn711783(a,b){var c=a*63+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn932861(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn939627(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn497241(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn399262(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn809837(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn013321(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn175631(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn286013(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn050270(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn827468(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn552176(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn715492(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn825866(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn574089(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn639384(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn665011(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn679025(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn597844(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn280278(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn926112(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn147338(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn015182(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn213183(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn034725(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn962825(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn874081(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn435336(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn053428(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn008444(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn365658(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn699990(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn301771(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn724732(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn297258(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn251505(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn614396(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn851173(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn788237(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn024175(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn459385(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn640558(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn042990(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn471830(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn014587(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn913735(a,b){var c=a*39+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn011539(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn763904(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn108449(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn734550(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn036847(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn224359(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn532102(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn533211(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn591379(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn195776(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn219229(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn821879(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn744877(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn629558(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn920059(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn918473(a,b){var c=a*55+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn540277(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn146937(a,b){var c=a*4+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn531660(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn051373(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn095123(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn440576(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn641516(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn795427(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn497666(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn908463(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn664620(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn235687(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn173491(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn959757(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn595908(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn235824(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn780362(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn348328(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn080050(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn333069(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn971814(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn794279(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn284486(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn983181(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn683011(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn115735(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn938039(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn198718(a,b){var c=a*27+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn815415(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn155728(a,b){var c=a*17+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn337682(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn832925(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn364775(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn794577(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn905954(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn762868(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn419081(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn390749(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn664774(a,b){var c=a*39+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn292123(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn186433(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn879033(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn492202(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn026649(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn117285(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn626052(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn893617(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn569430(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn208657(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn727157(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn389290(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn287358(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn331487(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn572583(a,b){var c=a*42+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn519111(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn880004(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn232294(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn229971(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn816863(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn628656(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn429469(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn726592(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn131995(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn218252(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn832541(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn404500(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn456478(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn508427(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn415851(a,b){var c=a*16+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn207975(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn878800(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn308668(a,b){var c=a*74+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn515158(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn568171(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn837614(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn165377(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn640333(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn874876(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn558224(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn809422(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn098354(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn766688(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn547905(a,b){var c=a*68+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn310336(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn900479(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn733027(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn467774(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn577325(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn471330(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn364558(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn927653(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn689004(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn114507(a,b){var c=a*14+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn309211(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn897760(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn119569(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn871477(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn646919(a,b){var c=a*78+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn512350(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn736986(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn125412(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn253318(a,b){var c=a*41+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn640845(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn506305(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn678817(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn521240(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn769843(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn387677(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn642923(a,b){var c=a*69+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn468314(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn471398(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn339015(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn161470(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn492053(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn199657(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn217764(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn842269(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn783317(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn737376(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn904422(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn759944(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn448268(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn234094(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn500212(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn541338(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn253795(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn091404(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn851138(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn681396(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn207765(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn492966(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn571289(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn100781(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn678879(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn156708(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn837575(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn115393(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn497626(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn821278(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn044582(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn904018(a,b){var c=a*39+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn647242(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn509200(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn689673(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn444229(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn882761(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn193614(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn653246(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn378785(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn756940(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn690689(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn638424(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn246252(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn700723(a,b){var c=a*96+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn307980(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn953237(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn849017(a,b){var c=a*46+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn367661(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn192547(a,b){var c=a*90+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn359318(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn475013(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn901110(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn068659(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn772261(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn903288(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn667298(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn324828(a,b){var c=a*58+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn727638(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn264353(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn501193(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn020568(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn723955(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn511908(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn904267(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn528797(a,b){var c=a*46+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn743258(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn872249(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn919567(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn774944(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn379825(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn579381(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn335757(a,b){var c=a*87+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn499210(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn977325(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn530145(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn422296(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn351553(a,b){var c=a*45+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn838530(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn290343(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn370517(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn341271(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn597270(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn661791(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn214796(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn627791(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn601353(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn197805(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn322583(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn634099(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn059853(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn545025(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn544875(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn388819(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn405935(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn398003(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn548642(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn888885(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn182373(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn981230(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn080042(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn062964(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn034848(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn119005(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn744923(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn455965(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn377646(a,b){var c=a*96+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn429543(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn801235(a,b){var c=a*24+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn058675(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn907044(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn369190(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn534470(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn426495(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn818730(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn730539(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn407662(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn031139(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn806999(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn057354(a,b){var c=a*92+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn125707(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn245486(a,b){var c=a*55+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn423707(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn324351(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn523079(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn279987(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn206059(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn468067(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn957352(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn388784(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn415979(a,b){var c=a*45+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn083048(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn064924(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn577569(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn053799(a,b){var c=a*22+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn337070(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn969974(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn809536(a,b){var c=a*94+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn183197(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn044795(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn565361(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn106492(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn441269(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn798793(a,b){var c=a*20+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn302874(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn826617(a,b){var c=a*21+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn405969(a,b){var c=a*32+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn569037(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn239663(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn134197(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn086055(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn169537(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn858727(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn804632(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn690250(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn708853(a,b){var c=a*48+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn992620(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn349275(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn485701(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn920205(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn822682(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn156832(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn661608(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn118927(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn358055(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn404062(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn322499(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn553220(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn860196(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn919091(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn153424(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn835417(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn175912(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn008358(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn468415(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn232370(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn661548(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn664305(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn674021(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn812249(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn623248(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn282340(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn861732(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn901255(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn822368(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn454324(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn687805(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn618598(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn489238(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn960075(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn001740(a,b){var c=a*29+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn851964(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn896899(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn509105(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn728264(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn774760(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn790169(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn960524(a,b){var c=a*35+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn287202(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn589453(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn432790(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn989358(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn010104(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn069004(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn697377(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn820739(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn926518(a,b){var c=a*55+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn674973(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn498017(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn754137(a,b){var c=a*59+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn167068(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn814658(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn826395(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn212995(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn925695(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn983366(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn778377(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn868557(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn517489(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn610172(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn819001(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn682695(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn336780(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn261061(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn562669(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn885198(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn809231(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn392067(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn144691(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn702251(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn335405(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn789792(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn653673(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn287792(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn057151(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn773608(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn107745(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn917192(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn343691(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn659185(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn830127(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn869227(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn437010(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn179314(a,b){var c=a*81+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn056395(a,b){var c=a*49+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn287453(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn977571(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn846525(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn172405(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn780613(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn649853(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn274885(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn948158(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn757470(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn679812(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn045674(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn181126(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn585973(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn981718(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn134280(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn191876(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn653950(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn068230(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn258326(a,b){var c=a*50+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn147142(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn793019(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn392967(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn686185(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn727760(a,b){var c=a*93+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn503257(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn086938(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn764109(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn589105(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn137584(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn762957(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn837114(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn373626(a,b){var c=a*92+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn188130(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn430688(a,b){var c=a*26+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn556658(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn809282(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn967520(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn772941(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn255015(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn936169(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn909471(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn035804(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn811201(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn497112(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn976564(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn187789(a,b){var c=a*96+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn005895(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn812312(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn518946(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn906727(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn505280(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn751677(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn671116(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn236483(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn319041(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn598178(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn323467(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn661691(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn193984(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn623124(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn648188(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn550396(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn771302(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn395018(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn503008(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn099838(a,b){var c=a*72+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn435831(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn848565(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn952443(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn247357(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn504981(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn148129(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn460563(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn752795(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn123060(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn600375(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn331288(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn490256(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn145167(a,b){var c=a*43+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn869653(a,b){var c=a*96+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn915022(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn351210(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn293981(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn390726(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn544635(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn415782(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn331430(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn063181(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn914807(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn585224(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn847354(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn252046(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn838121(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn076584(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn548571(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn360291(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn108139(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn589461(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn168834(a,b){var c=a*18+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn548685(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn947099(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn967289(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn282893(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn122861(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn372463(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn843967(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn906474(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn446809(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn024157(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn108391(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn833749(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn405978(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn145995(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn751546(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn454544(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn976670(a,b){var c=a*16+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn227063(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn910737(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn844864(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn681241(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn085452(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn757063(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn210467(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn613260(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn687809(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn509803(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn190975(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn993765(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn178178(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn737528(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn335946(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn216364(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn087795(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn817793(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn232442(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn210213(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn538071(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn158327(a,b){var c=a*29+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn503256(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn391616(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn545708(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn393234(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn919690(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn527556(a,b){var c=a*64+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn286728(a,b){var c=a*3+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn680386(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn962062(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn747069(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn059451(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn937235(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn504050(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn355724(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn195078(a,b){var c=a*9+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn639149(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn063542(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn854180(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn737250(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn822378(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn314144(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn554515(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn422822(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn155175(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn970981(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn769804(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn811755(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn949651(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn865634(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn894345(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn720621(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn718877(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn201663(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn323049(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn495635(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn960935(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn926998(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn072631(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn851179(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn270784(a,b){var c=a*75+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn585769(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn274537(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn482926(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn672539(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn040032(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn156023(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn735505(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn940825(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn744173(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn711197(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn407853(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn447981(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn801049(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn101343(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn207988(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn230934(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn912160(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn816979(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn764347(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn446541(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn584412(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn437357(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn462154(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn832343(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn140541(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn961833(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn322409(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn299087(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn773524(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn678368(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn076729(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn334079(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn845686(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn810386(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn380341(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn000901(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn055648(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn833590(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn615385(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn776911(a,b){var c=a*16+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn798018(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn455280(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn224438(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn343068(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn110802(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn409419(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn359136(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn154168(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn386277(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn714683(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn443602(a,b){var c=a*32+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn347614(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn858352(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn524016(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn505630(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn854674(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn823504(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn576562(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn243288(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn607856(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn694692(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn204437(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn194867(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn400047(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn337098(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn060081(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn516733(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn453294(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn930552(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn309446(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn193342(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn399764(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn569977(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn357546(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn477459(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn983614(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn459454(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn053497(a,b){var c=a*43+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn500457(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn398167(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn125622(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn033275(a,b){var c=a*54+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn764586(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn474556(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn473309(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn344129(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn164563(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn742318(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn178442(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn978347(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn504822(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn589999(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn819991(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn357141(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn999846(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn517877(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn172428(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn180448(a,b){var c=a*32+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn752910(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn044576(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn271699(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn166320(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn721856(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn406501(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn344039(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn722522(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn237224(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn169629(a,b){var c=a*35+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn757817(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn488991(a,b){var c=a*46+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn000882(a,b){var c=a*25+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn335285(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn621790(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn838754(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn083693(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn162004(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn618994(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn823469(a,b){var c=a*66+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn369611(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn669261(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn802091(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn273688(a,b){var c=a*52+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn466921(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn771618(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn525040(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn972081(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn100452(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn989651(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn763219(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn817208(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn108652(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn591134(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn191309(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn104540(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn535062(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn840996(a,b){var c=a*59+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn102904(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn690093(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn563176(a,b){var c=a*71+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn077959(a,b){var c=a*47+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn351858(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn846637(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn094256(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn388336(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn993842(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn909393(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn700105(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn203525(a,b){var c=a*20+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn674691(a,b){var c=a*42+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn974224(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn822263(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn579532(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn991396(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn060745(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn743185(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn235084(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn473256(a,b){var c=a*19+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn632446(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn504761(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn979861(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn123766(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn610515(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn708855(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn568226(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn782848(a,b){var c=a*58+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn947805(a,b){var c=a*20+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn802099(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn572850(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn741567(a,b){var c=a*83+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn295512(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn904224(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn161423(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn526880(a,b){var c=a*88+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn747487(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn984800(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn940400(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn365526(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn655173(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn428009(a,b){var c=a*91+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn850535(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn015528(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn100272(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn220104(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn605217(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn695019(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn205506(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn863504(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn843910(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn464484(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn076415(a,b){var c=a*25+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn966894(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn424469(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn117204(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn248924(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn131348(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn271600(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn032518(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn891890(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn516594(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn470833(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn541869(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn354758(a,b){var c=a*88+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn198654(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn376986(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn235063(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn668315(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn589797(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn543319(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn836573(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn680354(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn178260(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn554543(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn546154(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn399659(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn578384(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn125866(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn972967(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn633785(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn689152(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn838317(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn821554(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn678969(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn870038(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn218199(a,b){var c=a*84+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn526215(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn010023(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn812268(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn308033(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn573727(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn667017(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn725159(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn706678(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn442143(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn382433(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn741136(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn457178(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn218360(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn388956(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn166350(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn736027(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn357080(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn583332(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn312761(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn861488(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn441134(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn494934(a,b){var c=a*71+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn546525(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn498387(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn187557(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn842780(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn427553(a,b){var c=a*97+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn659717(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn069020(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn381592(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn162493(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn466243(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn392278(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn568836(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn019063(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn459525(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn140083(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn145292(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn952048(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn676386(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn761982(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn219764(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn752794(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn690721(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn402077(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn067853(a,b){var c=a*47+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn119299(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn993060(a,b){var c=a*8+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn196008(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn088667(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn005688(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn546190(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn206206(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn422618(a,b){var c=a*17+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn156947(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn865841(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn948134(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn432895(a,b){var c=a*40+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn231125(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn399915(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn783075(a,b){var c=a*76+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn270189(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn784041(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn166995(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn746813(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn973895(a,b){var c=a*43+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn026658(a,b){var c=a*44+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn527845(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn535536(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn716854(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn410409(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn214419(a,b){var c=a*85+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn929882(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn766771(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn728113(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn558982(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn052515(a,b){var c=a*49+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn093308(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn670121(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn600099(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn699984(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn556703(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn091817(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn547659(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn093627(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn506134(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn150730(a,b){var c=a*97+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn849553(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn502411(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn512889(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn873870(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn236574(a,b){var c=a*51+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn708122(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn405286(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn314791(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn376468(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn738656(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn402559(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn983645(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn363479(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn784370(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn441328(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn246352(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn980892(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn762138(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn092201(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn897868(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn584163(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn729832(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn676940(a,b){var c=a*82+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn346773(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn849453(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn285620(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn567383(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn023720(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn806089(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn348233(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn815070(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn509502(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn868288(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn387281(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn218029(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn757117(a,b){var c=a*83+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn767780(a,b){var c=a*88+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn372291(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn466961(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn321997(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn970554(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn836070(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn733307(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn106466(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn079947(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn965895(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn173406(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn235377(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn197725(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn581978(a,b){var c=a*75+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn877663(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn797337(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn284631(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn716003(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn204959(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn168001(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn604029(a,b){var c=a*84+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn806838(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn543366(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn790094(a,b){var c=a*35+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn810326(a,b){var c=a*73+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn204501(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn881448(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn075982(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn250951(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn849246(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn172263(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn989460(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn566381(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn897505(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn904080(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn045984(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn853014(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn768320(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn545051(a,b){var c=a*49+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn020590(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn078291(a,b){var c=a*34+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn870832(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn357433(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn048398(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn830687(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn393171(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn862456(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn227780(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn083735(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn988657(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn870725(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn623954(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn403905(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn950701(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn297026(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn899782(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn294663(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn724520(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn489663(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn068354(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn164220(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn186743(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn292948(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn850063(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn004840(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn322634(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn390164(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn311992(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn794063(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn602386(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn697833(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn021401(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn234102(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn040095(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn138818(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn522190(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn148749(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn680741(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn615352(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn931823(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn658689(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn214257(a,b){var c=a*72+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn246123(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn440932(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn692013(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn444831(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn823922(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn230537(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn961326(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn775385(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn690369(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn078679(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn932277(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn482533(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn646792(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn301419(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn567821(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn017492(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn121352(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn537792(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn635258(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn894722(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn448868(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn587409(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn497642(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn101714(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn998651(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn629461(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn151007(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn895544(a,b){var c=a*35+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn002433(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn570437(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn893248(a,b){var c=a*77+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn545093(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn536628(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn696565(a,b){var c=a*54+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn648991(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn827025(a,b){var c=a*76+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn712446(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn312221(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn803579(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn467623(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn375059(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn692951(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn434544(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn202927(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn331824(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn494383(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn155091(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn784752(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn873337(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn916655(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn759266(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn274036(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn223724(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn260558(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn406263(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn904055(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn794726(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn869465(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn540794(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn194773(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn581191(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn017593(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn024258(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn497154(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn147198(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn584978(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn403019(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn865249(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn790419(a,b){var c=a*67+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn534434(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn497385(a,b){var c=a*3+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn106673(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn039091(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn352188(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn145460(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn942696(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn696066(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn248040(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn669960(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn343653(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn033656(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn597886(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn641343(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn062670(a,b){var c=a*74+