function fn588958(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn641282(a,b){var c=a*10+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn463055(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn821836(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn118050(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn753156(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn990855(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn546899(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn872622(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn986804(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn722094(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn091263(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn678252(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn320185(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn627640(a,b){var c=a*29+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn235893(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn161873(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn273413(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn088911(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn857454(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn763238(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn128316(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn868483(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn400681(a,b){var c=a*77+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn243245(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn455553(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn037133(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn142980(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn956904(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn294514(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn823348(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn688619(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn832264(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn916315(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn713375(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn977118(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn029090(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn757274(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn995471(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn555568(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn103043(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn501243(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn243836(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn096816(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn461710(a,b){var c=a*25+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn657287(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn701133(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn886617(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn887093(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn841522(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn859959(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn599373(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn333767(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn939970(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn130594(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn813328(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn676708(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn281765(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn242315(a,b){var c=a*46+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn132568(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn471322(a,b){var c=a*49+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn470639(a,b){var c=a*36+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn753633(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn296771(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn938480(a,b){var c=a*10+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn946201(a,b){var c=a*12+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn603237(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn352321(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn446191(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn380614(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn370605(a,b){var c=a*37+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn673095(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn994018(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn547170(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn255540(a,b){var c=a*97+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn959150(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn197645(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn058594(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn678359(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn350353(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn234296(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn027551(a,b){var c=a*28+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn845643(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn988315(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn136420(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn532154(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn801172(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn319226(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn148706(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn123819(a,b){var c=a*22+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn486848(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn702020(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn836041(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn960485(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn264695(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn148478(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn757602(a,b){var c=a*15+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn615614(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn989223(a,b){var c=a*30+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn741531(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn108068(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn512035(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn844366(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn636504(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn760035(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn882892(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn532589(a,b){var c=a*56+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn360380(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn623826(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn002324(a,b){var c=a*79+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn869554(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn688293(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn427608(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn998631(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn127332(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn790556(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn786896(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn064810(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn652500(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn478750(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn580349(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn990163(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn824751(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn634987(a,b){var c=a*48+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn801675(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn543970(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn179061(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn264524(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn129815(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn648623(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn074570(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn559758(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn244785(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn419788(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn845835(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn724067(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn314460(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn046908(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn281267(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn449703(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn710086(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn728501(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn810027(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn571943(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn730116(a,b){var c=a*78+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn577391(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn964714(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn897736(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn298453(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn471329(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn412744(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn510900(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn790856(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn496968(a,b){var c=a*81+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn752795(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn353328(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn968068(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn947597(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn743286(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn411156(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn400484(a,b){var c=a*25+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn407222(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn250859(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn066999(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn704659(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn860601(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn381466(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn335042(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn675291(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn902758(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn614259(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn813529(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn072906(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn306293(a,b){var c=a*95+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn528606(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn028345(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn320714(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn805128(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn745607(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn126640(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn348784(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn638540(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn878270(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn911852(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn598282(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn860975(a,b){var c=a*31+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn427019(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn102719(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn536691(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn118335(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn423641(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn856984(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn609465(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn649325(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn926107(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn686379(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn705858(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn715696(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn859274(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn391953(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn896000(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn367246(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn693195(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn011464(a,b){var c=a*44+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn262325(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn755649(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn636929(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn269219(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn810387(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn030098(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn100183(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn955792(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn502667(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn405451(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn589388(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn803481(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn128280(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn457281(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn348805(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn456976(a,b){var c=a*74+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn845825(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn246403(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn821679(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn624700(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn105428(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn885271(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn301184(a,b){var c=a*84+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn252962(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn335964(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn754225(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn770408(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn704145(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn212831(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn937333(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn936436(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn345837(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn342685(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn610932(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn262225(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn755203(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn839003(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn079517(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn363139(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn854303(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn193291(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn415874(a,b){var c=a*96+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn317833(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn905840(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn069312(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn884387(a,b){var c=a*88+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn055230(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn058230(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn959424(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn451964(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn880175(a,b){var c=a*10+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn008510(a,b){var c=a*69+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn098336(a,b){var c=a*84+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn113455(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn000550(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn992608(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn163417(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn500934(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn082020(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn520993(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn660255(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn936619(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn209694(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn973226(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn076253(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn117131(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn727069(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn976528(a,b){var c=a*81+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn612573(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn619657(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn923277(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn967275(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn009730(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn900279(a,b){var c=a*13+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn004160(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn228091(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn208116(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn604553(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn930037(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn247798(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn942484(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn512970(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn424404(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn294868(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn403139(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn590820(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn405897(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn312850(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn240541(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn104780(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn606300(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn382849(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn976481(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn104155(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn797274(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn673768(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn267500(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn245506(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn973603(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn149852(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn101120(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn018720(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn301778(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn050621(a,b){var c=a*97+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn742746(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn557350(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn352101(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn527513(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn701576(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn580489(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn953054(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn958727(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn182822(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn092431(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn382970(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn901348(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn035927(a,b){var c=a*56+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn170884(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn672135(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn045159(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn780727(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn897771(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn536634(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn987568(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn347855(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn379947(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn653084(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn678539(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn363928(a,b){var c=a*4+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn561521(a,b){var c=a*40+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn290415(a,b){var c=a*93+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn621749(a,b){var c=a*3+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn109669(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn796954(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn201134(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn271220(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn491890(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn828264(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn250271(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn016053(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn348856(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn197655(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn921934(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn849998(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn090945(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn840788(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn401161(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn865707(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn766545(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn530364(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn171775(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn507048(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn367422(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn558131(a,b){var c=a*82+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn922705(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn789007(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn824357(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn828521(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn038748(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn194662(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn697217(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn355705(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn902980(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn579132(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn248623(a,b){var c=a*27+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn235443(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn529609(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn035702(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn857944(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn209866(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn160598(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn178148(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn970368(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn329127(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn435507(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn146456(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn052612(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn453544(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn310138(a,b){var c=a*60+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn649378(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn916593(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn057646(a,b){var c=a*54+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn743824(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn884612(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn838554(a,b){var c=a*40+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn462863(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn164774(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn711459(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn710975(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn363824(a,b){var c=a*81+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn580409(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn211725(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn008195(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn300190(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn021008(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn309231(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn240371(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn948666(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn231148(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn400014(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn853507(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn185694(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn340915(a,b){var c=a*59+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn648500(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn904640(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn259185(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn132912(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn451128(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn289346(a,b){var c=a*71+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn127190(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn846342(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn687066(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn108277(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn557576(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn413478(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn064623(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn265653(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn085692(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn124031(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn939373(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn651284(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn152631(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn651877(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn047609(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn273315(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn215129(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn234041(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn180296(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn498824(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn580750(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn634608(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn157258(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn510568(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn183977(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn632999(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn317794(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn804947(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn866114(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn214642(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn627988(a,b){var c=a*70+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn581393(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn742836(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn492224(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn192904(a,b){var c=a*72+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn012235(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn272694(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn952447(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn829848(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn789683(a,b){var c=a*35+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn262875(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn107769(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn154916(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn623268(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn351616(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn622372(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn133535(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn997268(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn240941(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn683047(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn606959(a,b){var c=a*65+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn851642(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn689382(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn136812(a,b){var c=a*79+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn466647(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn629104(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn828652(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn824935(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn070561(a,b){var c=a*32+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn127412(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn090331(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn148608(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn631756(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn425015(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn082960(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn787488(a,b){var c=a*9+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn134481(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn394652(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn509150(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn271121(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn348344(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn867525(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn692196(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn933644(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn017205(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn264458(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn279464(a,b){var c=a*25+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn505635(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn648602(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn645206(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn764371(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn096706(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn407248(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn327175(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn091069(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn608068(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn046229(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn221894(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn219670(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn527632(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn303834(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn645877(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn046194(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn651057(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn243154(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn171410(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn932851(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn104518(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn772939(a,b){var c=a*96+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn510529(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn805273(a,b){var c=a*68+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn530445(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn708678(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn323160(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn050103(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn207151(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn271844(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn986195(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn742676(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn435450(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn645639(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn042904(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn872337(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn649163(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn704240(a,b){var c=a*63+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn001361(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn133644(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn499863(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn096291(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn939482(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn511765(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn455061(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn869761(a,b){var c=a*89+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn838579(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn230478(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn846023(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn596213(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn695642(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn047682(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn268248(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn421767(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn417570(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn320770(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn544149(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn753206(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn223940(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn450604(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn065504(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn513092(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn092264(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn073519(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn108614(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn931061(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn762515(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn209717(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn927308(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn435963(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn446156(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn729490(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn483052(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn581305(a,b){var c=a*71+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn903875(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn141734(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn048761(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn943811(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn662172(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn181005(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn844033(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn836594(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn888680(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn815238(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn331044(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn208862(a,b){var c=a*57+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn925658(a,b){var c=a*26+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn110899(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn356310(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn323755(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn794456(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn386230(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn155497(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn368189(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn018572(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn244919(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn970650(a,b){var c=a*10+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn002387(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn292561(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn257768(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn065170(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn846636(a,b){var c=a*82+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn551583(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn657938(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn126769(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn145504(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn213934(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn350751(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn840319(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn449752(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn710210(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn667150(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn293370(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn571416(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn248473(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn989377(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn494127(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn724154(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn834911(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn750857(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn243637(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn189736(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn819824(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn819983(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn977616(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn697382(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn138721(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn907644(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn466334(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn324577(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn606906(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn885455(a,b){var c=a*40+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn418661(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn190977(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn009604(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn247165(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn895784(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn095694(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn806407(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn803215(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn556573(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn478638(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn001700(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn232114(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn959835(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn319665(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn843016(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn864283(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn547309(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn716728(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn253234(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn383118(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn766804(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn657683(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn114955(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn696605(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn390536(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn135362(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn741768(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn159409(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn309819(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn558771(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn893241(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn133553(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn324277(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn154957(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn774924(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn214079(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn603068(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn036766(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn616569(a,b){var c=a*67+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn359501(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn681371(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn463973(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn363548(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn636194(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn733927(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn910990(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn042484(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn312985(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn124686(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn504952(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn887595(a,b){var c=a*87+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn266633(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn092583(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn600364(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn874709(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn533320(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn302527(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn317263(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn426960(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn509211(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn879789(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn573096(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn224771(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn461911(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn015373(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn529364(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn225172(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn660491(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn153888(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn683275(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn688061(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn344190(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn837435(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn090642(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn991949(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn526852(a,b){var c=a*76+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn181589(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn694070(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn157732(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn799060(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn183274(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn428789(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn449994(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn454513(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn449590(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn508078(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn587989(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn066068(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn997638(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn323499(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn983739(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn390157(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn554601(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn532684(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn068574(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn289410(a,b){var c=a*42+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn867957(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn569752(a,b){var c=a*51+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn928200(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn798605(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn784423(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn195797(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn447473(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn580922(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn771237(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn186581(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn148561(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn268244(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn888604(a,b){var c=a*21+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn230445(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn641953(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn781068(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn648441(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn643345(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn566460(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn770937(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn468506(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn816427(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn952800(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn374616(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn473605(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn928912(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn156356(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn377055(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn618575(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn846483(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn872041(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn143962(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn459243(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn097727(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn882999(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn590444(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn667363(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn447512(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn176966(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn719397(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn162191(a,b){var c=a*57+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn970057(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn823396(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn924589(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn298853(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn297195(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn497751(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn083332(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn120021(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn155620(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn099832(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn979248(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn197246(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn608999(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn613247(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn733817(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn022881(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn307152(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn294506(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn471801(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn407383(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn616447(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn875144(a,b){var c=a*22+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn909132(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn909552(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn696425(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn859217(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn114355(a,b){var c=a*83+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn862469(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn994915(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn128838(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn234747(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn329571(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn861487(a,b){var c=a*87+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn993685(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn948179(a,b){var c=a*83+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn574253(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn602038(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn049168(a,b){var c=a*5+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn133670(a,b){var c=a*25+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn448198(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn720988(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn857896(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn812838(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn582446(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn724388(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn914680(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn919744(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn310035(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn599421(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn534181(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn596098(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn443405(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn375371(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn333444(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn991257(a,b){var c=a*70+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn024799(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn311470(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn022920(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn942986(a,b){var c=a*40+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn391096(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn777757(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn709943(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn925792(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn117274(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn032430(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn477915(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn382747(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn140866(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn268149(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn134812(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn670598(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn960577(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn388962(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn695540(a,b){var c=a*84+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn013437(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn201535(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn012442(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn483215(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn141641(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn822376(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn376172(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn050181(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn086831(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn757336(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn751957(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn773942(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn403018(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn580993(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn485559(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn039088(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn140007(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn503079(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn328630(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn031019(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn291958(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn071060(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn589500(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn321946(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn141411(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn843005(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn297873(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn291644(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn407417(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn388324(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn354613(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn296429(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn512885(a,b){var c=a*55+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn418490(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn864361(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn549247(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn538311(a,b){var c=a*51+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn450035(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn495243(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn770481(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn324835(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn579132(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn071063(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn446160(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn186701(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn530078(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn382006(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn510961(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn387367(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn829098(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn929226(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn212184(a,b){var c=a*88+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn703378(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn269046(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn422108(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn994378(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn341050(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn873273(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn764114(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn459594(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn187933(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn554832(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn603683(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn702219(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn506024(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn094514(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn777810(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn058423(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn127183(a,b){var c=a*21+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn713471(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn893251(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn162194(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn264076(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn660023(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn289684(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn071941(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn907429(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn424415(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn192892(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn812578(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn765181(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn478135(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn585064(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn723556(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn949547(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn643303(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn766858(a,b){var c=a*59+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn790108(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn884213(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn089901(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn160063(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn225738(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn828216(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn540066(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn619072(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn901058(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn247755(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn457971(a,b){var c=a*21+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn458078(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn831444(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn592470(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn533835(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn317349(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn131608(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn210437(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn401629(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn166407(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn951308(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn921723(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn640364(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn046159(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn300725(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn093843(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn060254(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn167031(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn412164(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn141663(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn063230(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn737652(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn177926(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn664770(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn386572(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn583916(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn017019(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn364984(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn143640(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn869712(a,b){var c=a*82+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn945746(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn517630(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn729659(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn706418(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn201541(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn681670(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn098959(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn503982(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn477934(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn211463(a,b){var c=a*11+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn501114(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn076596(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn310978(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn438515(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn186778(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn976480(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn636574(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn185350(a,b){var c=a*60+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn028854(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn669435(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn581770(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn239774(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn147475(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn993692(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn212060(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn515268(a,b){var c=a*16+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn432215(a,b){var c=a*54+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn424461(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn521412(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn378114(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn161484(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn746818(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn463474(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn844575(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn404757(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn960813(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn885535(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn583182(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn129419(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn458784(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn584597(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn492067(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn403104(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn620540(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn189035(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn612658(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn250351(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn132304(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn439296(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn400651(a,b){var c=a*94+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn363165(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn264948(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn374109(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn730203(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn858534(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn906368(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn258027(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn462040(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn254101(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn770246(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn964289(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn188467(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn334611(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn886317(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn933834(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn958123(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn887823(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn654375(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn613578(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn362612(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn943849(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn837591(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn193580(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn406565(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn961062(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn692900(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn991987(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn328531(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn797631(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn567481(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn101150(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn927020(a,b){var c=a*62+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn888520(a,b){var c=a*93+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn282998(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn887432(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn520040(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn013206(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn504507(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn688660(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn597093(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn789140(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn919343(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn681141(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn702893(a,b){var c=a*16+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn439910(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn041583(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn520681(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn655993(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn134309(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn454055(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn230214(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn204971(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn836596(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn447490(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn368953(a,b){var c=a*50+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn498596(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn429642(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn587499(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn712557(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn371846(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn903407(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn322873(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn761682(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn001543(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn984774(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn498561(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn387348(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn756314(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn987893(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn846986(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn487105(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn582753(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn835757(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn094186(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn082264(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn741950(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn070921(a,b){var c=a*30+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn456852(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn769579(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn133498(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn738346(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn058561(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn796200(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn110198(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn811083(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn759342(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn320889(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn249462(a,b){var c=a*54+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn148984(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn372789(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn281667(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn236061(a,b){var c=a*2+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn370795(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn446007(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn725741(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn285390(a,b){var c=a*84+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn295640(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn955847(a,b){var c=a*55+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn413511(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn163109(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn189276(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn099753(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn754487(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn232679(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn142141(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn864691(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn182628(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn412361(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn123392(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn501454(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn734798(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn067345(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn193737(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn913795(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn630868(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn263904(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn887119(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn543611(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn216157(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn015182(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn158992(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn578731(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn274830(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn666066(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn907184(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn342502(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn983310(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn181643(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn518259(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn029489(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn261024(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn651806(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn542840(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn298343(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn709612(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn818798(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn020833(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn275669(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn658935(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn770496(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn752294(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn928835(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn036141(a,b){var c=a*40+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn856753(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn959030(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn013570(a,b){var c=a*63+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn101949(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn783560(a,b){var c=a*38+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn317176(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn996081(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn378790(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn005664(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn427228(a,b){var c=a*49+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn542057(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn990840(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn969151(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn082520(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn118262(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn232078(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%7;}return c