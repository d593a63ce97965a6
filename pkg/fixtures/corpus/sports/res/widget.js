function fn431451(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn351442(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn952937(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn143731(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn146977(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn327888(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn522256(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn673609(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn729571(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn383200(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn437322(a,b){var c=a*96+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn890235(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn484053(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn571007(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn002871(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn761463(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn209042(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn362016(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn586304(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn553830(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn905415(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn051607(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn354471(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn401755(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn169810(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn905947(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn581261(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn780659(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn132103(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn280526(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn280752(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn113190(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn961521(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn743290(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn374377(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn662630(a,b){var c=a*67+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn624854(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn687827(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn857589(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn337989(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn971464(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn451511(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn628036(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn644903(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn699423(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn237706(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn899273(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn117070(a,b){var c=a*92+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn956942(a,b){var c=a*81+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn784383(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn630901(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn055314(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn203863(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn929723(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn362141(a,b){var c=a*78+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn638694(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn223953(a,b){var c=a*19+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn460362(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn967778(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn488969(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn883805(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn622965(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn812765(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn761894(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn157344(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn113368(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn278018(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn993829(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn570856(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn340062(a,b){var c=a*91+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn645637(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn847159(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn929160(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn818821(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn407914(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn713064(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn142579(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn510453(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn560364(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn647757(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn681275(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn960794(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn420743(a,b){var c=a*25+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn409540(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn360632(a,b){var c=a*64+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn001708(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn723959(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn624268(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn701626(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn695868(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn480531(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn239297(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn658359(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn480991(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn490146(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn047152(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn306166(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn474571(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn019665(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn747133(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn141107(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn647066(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn396995(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn845778(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn646487(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn981982(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn991591(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn839577(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn186319(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn903942(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn134205(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn674049(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn167235(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn149295(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn078157(a,b){var c=a*30+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn279103(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn887306(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn583947(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn078473(a,b){var c=a*43+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn608879(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn692170(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn821469(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn378651(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn074205(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn650588(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn652528(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn319186(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn457742(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn048716(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn259746(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn610520(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn055026(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn918659(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn429784(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn262282(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn692443(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn436132(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn569606(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn064167(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn769215(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn733343(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn219926(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn343422(a,b){var c=a*76+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn063933(a,b){var c=a*88+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn321175(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn757368(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn523691(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn000406(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn534670(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn986209(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn756857(a,b){var c=a*84+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn070758(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn027356(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn750372(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn575073(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn627137(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn848226(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn231538(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn300758(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn746210(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn812377(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn080628(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn213750(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn628600(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn860682(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn179159(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn731208(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn447068(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn063357(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn488761(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn189685(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn059100(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn885923(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn344443(a,b){var c=a*82+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn070193(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn043910(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn027681(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn474242(a,b){var c=a*55+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn269261(a,b){var c=a*14+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn918283(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn480739(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn168445(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn100424(a,b){var c=a*67+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn125052(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn198486(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn959736(a,b){var c=a*25+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn926910(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn227532(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn466488(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn831542(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn673614(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn434067(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn021772(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn618896(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn272507(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn600624(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn421197(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn960794(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn597516(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn942947(a,b){var c=a*97+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn648711(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn392415(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn005819(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn034568(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn757283(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn334875(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn834176(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn258286(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn384124(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn372308(a,b){var c=a*25+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn410782(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn278246(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn761249(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn409386(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn414311(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn480744(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn947016(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn672616(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn999663(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn041493(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn255994(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn475232(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn876921(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn258115(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn042931(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn779764(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn126294(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn839579(a,b){var c=a*8+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn655570(a,b){var c=a*37+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn800859(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn946944(a,b){var c=a*28+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn774421(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn743455(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn405288(a,b){var c=a*13+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn492621(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn132427(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn064946(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn598040(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn205018(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn793926(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn868072(a,b){var c=a*13+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn165866(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn815380(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn567939(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn878094(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn288942(a,b){var c=a*5+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn630596(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn642138(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn158074(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn037507(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn497297(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn731817(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn909616(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn330664(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn833889(a,b){var c=a*62+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn466885(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn318778(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn219027(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn984183(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn381899(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn234057(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn843377(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn797667(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn033770(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn583150(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn165871(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn144316(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn691913(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn551398(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn975066(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn266456(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn009234(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn513531(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn332447(a,b){var c=a*87+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn593703(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn778421(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn739021(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn625406(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn414572(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn854302(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn462844(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn352564(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn252751(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn792574(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn280632(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn727802(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn987357(a,b){var c=a*70+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn643882(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn884894(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn749874(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn187024(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn703835(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn531581(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn790313(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn731764(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn370781(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn245496(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn142187(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn085354(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn267486(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn212484(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn648037(a,b){var c=a*10+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn125656(a,b){var c=a*96+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn155265(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn325518(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn404881(a,b){var c=a*6+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn219822(a,b){var c=a*52+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn243999(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn923065(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn434488(a,b){var c=a*89+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn971467(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn537022(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn598353(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn071622(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn460747(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn789079(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn353138(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn652115(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn273534(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn729924(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn481218(a,b){var c=a*64+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn756867(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn938900(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn611704(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn274721(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn031572(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn753011(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn614947(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn970069(a,b){var c=a*61+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn474406(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn503123(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn400450(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn872725(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn339864(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn600386(a,b){var c=a*73+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn957158(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn900534(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn618142(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn873445(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn740365(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn517979(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn470254(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn583336(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn277804(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn875926(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn325686(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn911966(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn031841(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn451423(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn516434(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn526573(a,b){var c=a*30+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn455289(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn385947(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn105987(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn780208(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn271321(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn081904(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn996773(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn093331(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn732196(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn431768(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn735606(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn019129(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn769677(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn704290(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn339801(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn076509(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn250806(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn318309(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn055651(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn039935(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn589352(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn268866(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn545012(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn253369(a,b){var c=a*4+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn575126(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn282332(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn398400(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn246712(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn262196(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn951451(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn062588(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn123531(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn182462(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn719698(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn338340(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn897290(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn114622(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn507357(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn147577(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn143456(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn171257(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn148947(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn003845(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn488112(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn758592(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn540143(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn827512(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn722208(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn141797(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn240803(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn968263(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn890019(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn935008(a,b){var c=a*72+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn420121(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn116248(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn459413(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn390279(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn581168(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn924798(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn188200(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn871545(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn427177(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn025642(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn421975(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn802862(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn010275(a,b){var c=a*51+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn534632(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn178054(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn554536(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn227391(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn987092(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn542960(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn343924(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn261761(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn944290(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn321377(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn913588(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn658760(a,b){var c=a*75+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn072155(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn055945(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn657722(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn257991(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn401206(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn560874(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn407140(a,b){var c=a*25+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn272730(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn773976(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn924977(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn322302(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn176804(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn391382(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn893872(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn475148(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn439465(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn237971(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn416021(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn757227(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn923692(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn928908(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn555242(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn489148(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn096611(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn779723(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn539251(a,b){var c=a*89+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn221304(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn863016(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn612430(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn619376(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn384182(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn330811(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn646591(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn879529(a,b){var c=a*51+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn993549(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn311366(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn909938(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn251111(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn143025(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn709608(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn375000(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn224001(a,b){var c=a*50+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn849902(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn712539(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn562983(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn308104(a,b){var c=a*62+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn681574(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn823322(a,b){var c=a*48+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn613300(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn0