function fn741093(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn341907(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn814045(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn757112(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn810564(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn756846(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn799899(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn043407(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn913626(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn185355(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn829142(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn724035(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn741494(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn958809(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn337905(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn457813(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn737861(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn166271(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn310228(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn158535(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn290772(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn858613(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn337803(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn250656(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn138289(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn515278(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn659003(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn219081(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn951472(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn802183(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn960833(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn658683(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn069496(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn737319(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn694260(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn933167(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn366011(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn946714(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn010893(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn755871(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn538116(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn180791(a,b){var c=a*86+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn628385(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn664559(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn166946(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn045424(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn720457(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn368246(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn201491(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn583251(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn952778(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn693374(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn040920(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn752311(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn622478(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn713022(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn554913(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn807558(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn971570(a,b){var c=a*88+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn433518(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn923724(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn215356(a,b){var c=a*25+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn476066(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn975736(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn330492(a,b){var c=a*27+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn749339(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn892661(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn463718(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn639119(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn238632(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn538228(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn407691(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn179005(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn128419(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn597143(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn346535(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn504154(a,b){var c=a*81+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn144066(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn435469(a,b){var c=a*84+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn556120(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn655552(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn898387(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn021458(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn685774(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn380888(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn591808(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn016635(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn679111(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn112209(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn144198(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn747741(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn315005(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn688656(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn745026(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn777605(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn062288(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn295365(a,b){var c=a*12+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn220186(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn625021(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn781448(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn267079(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn102046(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn729241(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn556048(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn862408(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn658223(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn023336(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn088731(a,b){var c=a*47+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn908557(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn304315(a,b){var c=a*2+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn845277(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn996551(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn083490(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn186532(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn299379(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn597687(a,b){var c=a*50+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn786458(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn694820(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn464523(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn787157(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn916038(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn083915(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn791131(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn348072(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn416624(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn714886(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn944947(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn043440(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn167117(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn173022(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn306532(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn423168(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn776907(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn924235(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn098840(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn589239(a,b){var c=a*7+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn819871(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn435249(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn314436(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn497337(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn813928(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn594229(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn239297(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn398443(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn385089(a,b){var c=a*50+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn871654(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn318542(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn934148(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn459345(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn644888(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn743478(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn874079(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn634790(a,b){var c=a*46+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn643969(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn409611(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn788829(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn370428(a,b){var c=a*91+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn765859(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn280868(a,b){var c=a*8+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn932496(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn301785(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn074607(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn289160(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn390679(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn543143(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn243002(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn618667(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn377301(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn656987(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn803693(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn920604(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn565452(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn859063(a,b){var c=a*81+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn494347(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn239065(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn892464(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn947380(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn049559(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn270553(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn007818(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn826826(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn090142(a,b){var c=a*23+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn394563(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn833812(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn183659(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn668743(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn658396(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn863085(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn275211(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn022972(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn528537(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn854217(a,b){var c=a*63+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn525683(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn119803(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn581094(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn975628(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn264456(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn037884(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn762181(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn654975(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn855562(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn032361(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn795308(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn253495(a,b){var c=a*73+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn737953(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn623585(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn775795(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn956140(a,b){var c=a*65+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn753392(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn388675(a,b){var c=a*45+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn461255(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn889237(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn718960(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn112992(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn439307(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn509449(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn000855(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn630949(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn776134(a,b){var c=a*2+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn238467(a,b){var c=a*41+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn827702(a,b){var c=a*21+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn230842(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn855022(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn053227(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn484926(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn109732(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn178114(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn467966(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn851067(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn782470(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn947409(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn868538(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn547909(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn601286(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn252604(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn904022(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn491282(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn576406(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn897873(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn683528(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn171003(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn065457(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn440969(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn113299(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn699798(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn400290(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn576018(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn919871(a,b){var c=a*67+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn463241(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn636119(a,b){var c=a*29+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn918645(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn674308(a,b){var c=a*19+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn554787(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn314696(a,b){var c=a*11+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn937662(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn892279(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn663876(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn129668(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn973745(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn073269(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn815763(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn987573(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn539496(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn696328(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn597534(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn998893(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn825047(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn987488(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn498440(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn950210(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn021556(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn662771(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn176011(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn198128(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn999295(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn907823(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn685491(a,b){var c=a*9+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn309994(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn975369(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn521361(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn674572(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn627472(a,b){var c=a*2+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn189735(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn259265(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn161992(a,b){var c=a*88+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn006511(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn300898(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn483249(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn539849(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn350475(a,b){var c=a*28+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn017115(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn973316(a,b){var c=a*39+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn812803(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn155792(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn342306(a,b){var c=a*56+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn536307(a,b){var c=a*47+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn751744(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn231112(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn420374(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn973928(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn653314(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn851771(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn953895(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn129149(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn710762(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn314486(a,b){var c=a*9+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn534273(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn480834(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn417298(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn377458(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn437139(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn421614(a,b){var c=a*56+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn069512(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn229424(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn880181(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn270252(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn923581(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn094989(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn309505(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn186157(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn620820(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn843927(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn122406(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn924659(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn424043(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn835173(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn689943(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn292769(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn111236(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn792618(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn166950(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn516402(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn887178(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn748502(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn383395(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn174568(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn174972(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn140453(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn437015(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn770007(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn197776(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn468657(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn394672(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn036645(a,b){var c=a*48+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn454980(a,b){var c=a*93+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn823187(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn699159(a,b){var c=a*49+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn777286(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn964932(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn504868(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn415595(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn704778(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn713419(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn286084(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn706834(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn454166(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn758881(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn244210(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn233213(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn047031(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn879133(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn222646(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn588014(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn174789(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn569250(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn523971(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn442839(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn181851(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn996007(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn118140(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn914129(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn738624(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn065299(a,b){var c=a*84+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn627172(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn365653(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn282628(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn296600(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn759397(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn216472(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn862518(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn252335(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn086325(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn920636(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn582475(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn159483(a,b){var c=a*29+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn947411(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn758643(a,b){var c=a*30+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn183546(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn228364(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn482111(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn924698(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn904650(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn907193(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn530092(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn233111(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn168216(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn896603(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn891138(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn384972(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn062615(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn855357(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn894549(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn804339(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn940815(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn601278(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn234835(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn439357(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn789393(a,b){var c=a*16+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn337581(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn498005(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn128338(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn437738(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn230386(a,b){var c=a*42+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn264050(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn378728(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn761699(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn688632(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn420614(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn944506(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn225835(a,b){var c=a*2+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn536091(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn103115(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn915521(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn718858(a,b){var c=a*19+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn315458(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn290633(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn701338(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn567597(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn099806(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn410924(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn618434(a,b){var c=a*48+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn601563(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn587759(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn348918(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn188056(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn625600(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn894367(a,b){var c=a*37+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn927700(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn773071(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn308116(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn925100(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn374917(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn511225(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn400279(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn952157(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn959843(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn790327(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn892674(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn172880(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn373294(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn894002(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn554974(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn674425(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn649109(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn713490(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn662357(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn401552(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn382571(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn587513(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn189042(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn718536(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn628228(a,b){var c=a*41+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn072711(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn088078(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn886613(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn341895(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn578199(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn539397(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn195545(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn096636(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn081833(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn749634(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn844901(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn725907(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn852264(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn354863(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn163457(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn023309(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn765785(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn216375(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn168038(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn592802(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn920277(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn419774(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn768741(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn851684(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn089131(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn084795(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn397785(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn071660(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn355066(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn058655(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn753410(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn021503(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn319908(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn954024(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn291086(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn497157(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn334089(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn096619(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn316974(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn934820(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn145906(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn440846(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn762260(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn588273(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn693322(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn936571(a,b){var c=a*63+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn158410(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn446523(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn139191(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn673825(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn123026(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn394544(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn188599(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn985028(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn338277(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn968437(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn711427(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn203455(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn773079(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn253580(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn889078(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn392431(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn039128(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn787956(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn800548(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn368122(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn347827(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn195076(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn813270(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn142809(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn437333(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn347972(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn222858(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn630475(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn344854(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn675869(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn154899(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn694308(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn188609(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn321230(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn490069(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn994305(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn198506(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn322673(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn020860(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn728263(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn268126(a,b){var c=a*58+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn464975(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn504676(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn378724(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn936006(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn967209(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn361863(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn563232(a,b){var c=a*49+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn803303(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn423113(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn006410(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn985266(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn308817(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn224914(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn838825(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn045721(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn821583(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn772301(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn722525(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn195152(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn715358(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn680592(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn479768(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn022704(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn534993(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn867576(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn152956(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn857860(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn062959(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn795203(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn252618(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn385526(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn743567(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn195242(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn283300(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn209714(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn330927(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn855263(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn375136(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn393455(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn378546(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn568311(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn822020(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn955338(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn101322(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn853859(a,b){var c=a*57+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn322500(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn521821(a,b){var c=a*34+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn105380(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn863758(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn290703(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn531413(a,b){var c=a*39+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn724964(a,b){var c=a*70+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn939041(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn947146(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn673305(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn788732(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn918281(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn386028(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn356323(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn491504(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn825613(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn595680(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn308507(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn969305(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn116185(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn531458(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn494999(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn060584(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn772083(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn515197(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn279565(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn778179(a,b){var c=a*8+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn271007(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn208458(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn539208(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn881090(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn395920(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn026111(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn173395(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn294046(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn136978(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn137668(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn957813(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn302995(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn381760(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn972393(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn079970(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn127486(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn990585(a,b){var c=a*46+b;for(var i