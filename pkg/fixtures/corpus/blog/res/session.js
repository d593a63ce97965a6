function fn417244(a,b){var c=a*43+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn126678(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn431913(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn953158(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn928341(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn087227(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn052987(a,b){var c=a*81+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn826469(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn113201(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn062921(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn586904(a,b){var c=a*74+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn020294(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn986201(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn551277(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn336672(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn489666(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn308871(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn465310(a,b){var c=a*2+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn941341(a,b){var c=a*13+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn358546(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn872472(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn590368(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn520608(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn488806(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn954150(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn511332(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn457825(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn800621(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn047140(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn663321(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn621560(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn897103(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn237744(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn207874(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn263099(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn016776(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn175569(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn550847(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn546725(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn550308(a,b){var c=a*20+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn815634(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn614148(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn390031(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn883639(a,b){var c=a*11+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn418294(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn963654(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn799471(a,b){var c=a*90+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn486519(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn829306(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn758356(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn407109(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn499037(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn393464(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn388900(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn251328(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn563467(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn713254(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn114318(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn408480(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn605868(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn670738(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn352579(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn651880(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn517068(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn974448(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn654260(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn315028(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn761747(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn378698(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn532961(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn482658(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn672001(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn478809(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn487288(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn817511(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn796883(a,b){var c=a*51+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn728404(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn892464(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn839225(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn478108(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn226881(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn335731(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn683497(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn744213(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn747824(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn339469(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn810920(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn913982(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn525665(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn881949(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn773353(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn338732(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn771008(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn292022(a,b){var c=a*27+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn706209(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn474358(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn783016(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn345437(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn591274(a,b){var c=a*4+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn239564(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn541973(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn240383(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn650380(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn457482(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn381288(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn580154(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn426301(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn406664(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn519641(a,b){var c=a*28+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn684692(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn810846(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn043141(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn659175(a,b){var c=a*96+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn564905(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn037114(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn407006(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn314774(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn182183(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn263847(a,b){var c=a*65+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn870500(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn145044(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn866797(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn586965(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn413745(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn064122(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn053953(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn453584(a,b){var c=a*48+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn297988(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn059224(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn736203(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn627651(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn450531(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn096850(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn122518(a,b){var c=a*39+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn769204(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn600627(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn195367(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn321300(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn061139(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn123157(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn349517(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn301120(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn913015(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn895462(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn666404(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn822111(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn965502(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn259756(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn112495(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn672413(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn062543(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn391096(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn666242(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn746727(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn931665(a,b){var c=a*47+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn870995(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn317127(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn787386(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn629696(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn799051(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn815954(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn605791(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn414697(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn264427(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn764481(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn570216(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn896844(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn286348(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn095950(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn169300(a,b){var c=a*78+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn119606(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn009075(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn293623(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn540184(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn001797(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn978423(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn125251(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn052534(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn221942(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn326025(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn781047(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn637709(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn146722(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn703041(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn749359(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn385769(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn046800(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn349973(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn411543(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn893050(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn938402(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn945970(a,b){var c=a*82+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn621220(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn046962(a,b){var c=a*32+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn538646(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn457567(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn628914(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn499994(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn715953(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn528395(a,b){var c=a*72+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn829306(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn885092(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn668260(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn131375(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn519192(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn648457(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn368915(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn165676(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn004169(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn621983(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn563836(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn852409(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn902859(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn758033(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn123807(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn516586(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn076057(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn512718(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn067343(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn174269(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn444195(a,b){var c=a*24+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn844987(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn099295(a,b){var c=a*50+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn810337(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn787844(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn225197(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn877977(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn159849(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn137860(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn528574(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn621738(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn256532(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn693072(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn198328(a,b){var c=a*84+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn424956(a,b){var c=a*30+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn302305(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn340857(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn650512(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn949486(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn341824(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn907832(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn778544(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn232787(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn635458(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn261936(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn450324(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn207538(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn569666(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn431110(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn610734(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn157727(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn740144(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn722037(a,b){var c=a*33+b;for(var i=0;i<29;i