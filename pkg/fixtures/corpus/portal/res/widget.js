function fn398366(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn125098(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn725608(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn867262(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn839720(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn916523(a,b){var c=a*73+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn349990(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn663581(a,b){var c=a*69+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn605193(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn161966(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn885524(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn621914(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn602999(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn745143(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn383079(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn048755(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn881269(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn126819(a,b){var c=a*83+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn054084(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn771170(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn715833(a,b){var c=a*19+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn250468(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn392523(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn133450(a,b){var c=a*64+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn261321(a,b){var c=a*74+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn312665(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn618289(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn713031(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn876291(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn235635(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn481710(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn782176(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn725759(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn164140(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn632397(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn582048(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn005824(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn831523(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn457885(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn706546(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn322851(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn408371(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn569192(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn514420(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn956857(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn506840(a,b){var c=a*67+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn840774(a,b){var c=a*7+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn899120(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn577371(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn228430(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn050950(a,b){var c=a*76+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn724828(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn948283(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn882857(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn848615(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn296885(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn954437(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn006753(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn707125(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn437051(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn093464(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn680162(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn504742(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn424143(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn896568(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn413962(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn363789(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn755182(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn653682(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn433555(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn092074(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn712307(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn068099(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn150281(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn962729(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn127972(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn258731(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn188236(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn756348(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn030466(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn055565(a,b){var c=a*81+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn186224(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn064405(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn765838(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn409995(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn971706(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn028900(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn940270(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn866530(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn009898(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn061011(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn263896(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn471282(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn073203(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn078320(a,b){var c=a*54+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn478555(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn743295(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn709227(a,b){var c=a*68+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn610255(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn947810(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn934234(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn133198(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn243900(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn437616(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn185191(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn675943(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn884101(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn117717(a,b){var c=a*75+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn109594(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn579037(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn055932(a,b){var c=a*90+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn768525(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn045930(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn915375(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn697513(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn059979(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn987653(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn175385(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn472895(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn807976(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn735974(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn213544(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn203420(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn601222(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn936575(a,b){var c=a*15+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn493186(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn563285(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn336642(a,b){var c=a*84+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn987870(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn798294(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn294754(a,b){var c=a*20+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn158462(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn450418(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn642542(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn133856(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn788934(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn277173(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn993135(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn136430(a,b){var c=a*15+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn632301(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn070865(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn300713(a,b){var c=a*51+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn187902(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn644703(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn160967(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn412477(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn721762(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn761998(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn595829(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn251802(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn937660(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn009632(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn454130(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn528374(a,b){var c=a*92+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn153554(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn689968(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn839738(a,b){var c=a*14+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn713436(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn706483(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn591551(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn411865(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn991011(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn160955(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn686589(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn694105(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn672093(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn157052(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn656387(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn997810(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn556684(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn352019(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn418620(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn044511(a,b){var c=a*57+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn783288(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn498875(a,b){var c=a*10+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn708815(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn634211(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn798787(a,b){var c=a*32+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn640076(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn953138(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn780801(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn811604(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn073916(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn181434(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn421311(a,b){var c=a*12+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn916665(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn283101(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn571969(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn630063(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn007024(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn013192(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn209428(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn234483(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn421864(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn883340(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn502686(a,b){var c=a*40+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn878282(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn053263(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn589001(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn387464(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn574546(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn601774(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn283726(a,b){var c=a*35+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn018567(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn879402(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn702331(a,b){var c=a*55+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn650808(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn915753(a,b){var c=a*39+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn722547(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn176403(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn917401(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn728929(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn048216(a,b){var c=a*78+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn414447(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn739802(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn799827(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn273260(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn761645(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn708575(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn997440(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn720371(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn774151(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn728091(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn503179(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn560276(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn563500(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn098836(a,b){var c=a*45+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn727241(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn142422(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn456951(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn992434(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn823761(a,b){var c=a*53+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn431014(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn750919(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn715490(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn228167(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn941348(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn802876(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn728770(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn243011(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn458844(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn314875(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn667296(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn211745(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn943699(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn124393(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn077331(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn524428(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn836676(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn088115(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn527643(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn107152(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn556955(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn293109(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn545714(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn172543(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn759491(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn692509(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn917561(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn571935(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn058202(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn779578(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn833141(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn889801(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn488803(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn352680(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn264144(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn020895(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn760356(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn938049(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn017099(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn784307(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn870854(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn680757(a,b){var c=a*11+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn636621(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn491944(a,b){var c=a*43+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn117748(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn792806(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn866040(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn831214(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn003037(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn181619(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn863365(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn958609(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn195957(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn016393(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn210387(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn340568(a,b){var c=a*33+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn577155(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn855895(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn646973(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn535774(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn823372(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn728732(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn372435(a,b){var c=a*22+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn418920(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn076516(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn434855(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn348555(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn900252(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn138028(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn544052(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn888517(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn898339(a,b){var c=a*18+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn148585(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn666887(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn553048(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn561805(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn816902(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn236382(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn452859(a,b){var c=a*23+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn753398(a,b){var c=a*14+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn776615(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn032722(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn189678(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn487563(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn160992(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn197141(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn052512(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn203733(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn796908(a,b){var c=a*83+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn176880(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn982360(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn566191(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn283199(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn926516(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn795766(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn765313(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn833080(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn925684(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn355635(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn854406(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn842468(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn751180(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn928748(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn661262(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn235293(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn142637(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn178538(a,b){var c=a*39+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn406074(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn696350(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn881711(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn633182(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn355525(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn540858(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn485640(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn049106(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn698718(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn547848(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn544639(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn734554(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn518616(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn342502(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn166666(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn033460(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn168537(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn313277(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn566153(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn650510(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn342744(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn654127(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn639253(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn714380(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn724947(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn191064(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn787375(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn337649(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn409781(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn968095(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn608260(a,b){var c=a*27+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn445989(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn739785(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn052728(a,b){var c=a*94+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn666728(a,b){var c=a*55+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn212751(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn574218(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn924328(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn982493(a,b){var c=a*24+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn051779(a,b){var c=a*53+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn759436(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn395685(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn214774(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn207804(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn192119(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn800877(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn773078(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn130339(a,b){var c=a*61+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn992263(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn192783(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn722558(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn838155(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn559962(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn498468(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn198720(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn493073(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn689304(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn241625(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn330306(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn750081(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn498754(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn016218(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn162378(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn477897(a,b){var c=a*40+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn727852(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn413185(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn859859(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn430928(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn889390(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn348970(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn938573(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn390645(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn941022(a,b){var c=a*41+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn505968(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn224221(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn435867(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn177483(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn696356(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn249065(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn296285(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn112684(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn090481(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn770917(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn587687(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn698918(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn910646(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn269335(a,b){var c=a*46+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn807877(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn238445(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn211978(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn573159(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn920624(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn392255(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn168285(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn388502(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn444856(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn399097(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn776004(a,b){var c=a*27+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn393716(a,b){var c=a*10+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn029453(a,b){var c=a*51+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn972377(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn109131(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn821630(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn946664(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn476369(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn635712(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn550078(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn838557(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn595593(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn766812(a,b){var c=a*10+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn568989(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn943997(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn706765(a,b){var c=a*7+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn692105(a,b){var c=a*76+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn195900(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn001846(a,b){var c=a*45+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn926778(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn046468(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn996479(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn350296(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn107380(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn486647(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn661612(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn608132(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn653821(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn336913(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn195552(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn518951(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn224055(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn851318(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn426873(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn321439(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn497025(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn492007(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn252578(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn349278(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn831140(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn328709(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn900172(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn640028(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn554036(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn927515(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn258199(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn072660(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn809532(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn398547(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn759845(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn375241(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn258369(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn014649(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn889215(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn617640(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn272770(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn639034(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn534680(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn287656(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn444570(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn580385(a,b){var c=a*12+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn318049(a,b){var c=a*82+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn156093(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn647027(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn916745(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn624965(a,b){var c=a*63+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn778120(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn540618(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn210128(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn275229(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn962708(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn113470(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn644497(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn886120(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn128233(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn762562(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn531061(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn273342(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn618318(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn723067(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn393863(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn535457(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn266136(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn016845(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn824484(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn279303(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn563362(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn951265(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn937131(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn383214(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn926212(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn039452(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn562410(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn850834(a,b){var c=a*53+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn189693(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn326165(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn257330(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn490744(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn994942(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn339419(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn842209(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn299063(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn241494(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn138528(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn216212(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn644167(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn742927(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn662302(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn513611(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%