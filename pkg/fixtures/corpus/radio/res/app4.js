function fn626898(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn101631(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn142617(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn207550(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn776002(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn421014(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn471609(a,b){var c=a*61+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn777129(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn325825(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn674453(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn307383(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn086998(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn849019(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn782811(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn934725(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn442490(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn596027(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn634269(a,b){var c=a*66+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn217208(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn313495(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn982030(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn163335(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn471302(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn512279(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn335844(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn292976(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn519671(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn115640(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn878341(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn396211(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn990348(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn340074(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn019058(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn472016(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn747185(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn644077(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn240647(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn916649(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn818048(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn458393(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn943594(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn762426(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn041954(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn475943(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn843322(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn188077(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn939741(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn327516(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn062685(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn278473(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn259381(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn736622(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn742664(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn224118(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn414913(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn807120(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn858035(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn834260(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn319173(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn806549(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn709667(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn802044(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn632042(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn901821(a,b){var c=a*42+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn280096(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn574850(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn424512(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn811124(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn679538(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn006492(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn192024(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn849578(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn645642(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn432345(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn185075(a,b){var c=a*89+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn981637(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn489434(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn781747(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn630981(a,b){var c=a*96+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn100882(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn870212(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn327579(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn159348(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn585147(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn764952(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn798156(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn642166(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn747166(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn630620(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn386279(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn361551(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn434267(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn050213(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn577805(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn835766(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn226054(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn121061(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn648031(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn814898(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn087120(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn191898(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn432976(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn105548(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn411322(a,b){var c=a*51+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn007583(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn448225(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn291874(a,b){var c=a*45+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn415391(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn482118(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn573144(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn899186(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn320645(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn706383(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn196464(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn112102(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn431245(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn917987(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn376595(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn161591(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn354291(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn011582(a,b){var c=a*6+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn334178(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn050191(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn920170(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn332307(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn672854(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn617805(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn511670(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn434221(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn037625(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn999345(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn295639(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn584820(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn831609(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn862594(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn521781(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn644963(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn262144(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn601091(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn524340(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn483280(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn934296(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn298292(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn869061(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn523847(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn770354(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn016934(a,b){var c=a*38+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn925026(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn830910(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn895161(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn467694(a,b){var c=a*76+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn639364(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn326535(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn930079(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn389652(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn764641(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn002556(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn722089(a,b){var c=a*21+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn240508(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn067399(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn414926(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn588410(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn276676(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn369049(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn206468(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn461453(a,b){var c=a*55+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn737210(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn787145(a,b){var c=a*9+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn335097(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn681625(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn086360(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn538561(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn903644(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn883848(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn556187(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn789687(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn804831(a,b){var c=a*8+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn906004(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn010424(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn634731(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn119028(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn539629(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn861328(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn393955(a,b){var c=a*16+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn455013(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn488509(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn032998(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn695695(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn169229(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn078478(a,b){var c=a*51+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn665466(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn856658(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn224262(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn697359(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn466309(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn552923(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn514965(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn733350(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn645518(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn624890(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn931077(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn811485(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn045474(a,b){var c=a*22+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn020667(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn953641(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn117380(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn856951(a,b){var c=a*44+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn792522(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn981016(a,b){var c=a*96+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn748090(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn325155(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn513505(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn796086(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn077123(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn153421(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn025037(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn584952(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn892244(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn836958(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn881984(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn404351(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn447748(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn615914(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn170479(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn261006(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn988502(a,b){var c=a*47+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn050216(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn709371(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn429378(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn321905(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn577808(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn944684(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn606567(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn415056(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn496880(a,b){var c=a*71+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn220871(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn378469(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn696672(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn561689(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn650028(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn443032(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn800245(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn475888(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn037036(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn541248(a,b){var c=a*73+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn857792(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn936374(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn171974(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn050197(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn588625(a,b){var c=a*6+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn027833(a,b){var c=a*5+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn487864(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn182404(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn313118(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn234377(a,b){var c=a*10+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn888428(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn930561(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn722154(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn097871(a,b){var c=a*47+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn274700(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn630602(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn269060(a,b){var c=a*7+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn360866(a,b){var c=a*16+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn886137(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn845207(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn652039(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%4;}return