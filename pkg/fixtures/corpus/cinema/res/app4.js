function fn424174(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn802730(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn736399(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn967896(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn765809(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn091464(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn065734(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn816987(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn820944(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn333051(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn256236(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn832997(a,b){var c=a*95+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn030081(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn876596(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn660085(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn554643(a,b){var c=a*91+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn921874(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn220181(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn817288(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn547112(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn489870(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn073317(a,b){var c=a*33+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn636366(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn983077(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn317528(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn135013(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn269274(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn348629(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn979725(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn786071(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn764506(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn569179(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn591524(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn675323(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn813558(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn744876(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn367910(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn480597(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn067510(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn071902(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn459346(a,b){var c=a*46+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn747371(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn452793(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn350296(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn328075(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn422526(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn793059(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn457584(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn590544(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn361442(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn174658(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn470271(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn707294(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn952345(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn064901(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn094561(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn496941(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn659383(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn444340(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn954962(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn221507(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn341411(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn765671(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn149167(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn184940(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn199957(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn658193(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn153615(a,b){var c=a*95+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn278323(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn537742(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn065440(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn627163(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn731742(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn094095(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn270139(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn355377(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn776950(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn197468(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn766410(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn828852(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn569448(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn522059(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn449423(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn537859(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn234590(a,b){var c=a*34+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn888154(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn533125(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn582776(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn951083(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn733213(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn854754(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn996443(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn752986(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn958194(a,b){var c=a*54+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn971218(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn476491(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn180895(a,b){var c=a*68+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn918803(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn791984(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn136305(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn771845(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn008177(a,b){var c=a*63+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn420645(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn586938(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn895002(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn088899(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn111212(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn621484(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn054991(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn950014(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn479665(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn465584(a,b){var c=a*51+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn730187(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn892000(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn660233(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn383194(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn610004(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn262987(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn760278(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn099772(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn133049(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn418818(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn529280(a,b){var c=a*81+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn518199(a,b){var c=a*43+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn514887(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn134262(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn539789(a,b){var c=a*57+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn439506(a,b){var c=a*75+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn017948(a,b){var c=a*59+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn172455(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn162424(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn321450(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn982498(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn074980(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn671616(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn726877(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn854462(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn681854(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn935962(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn297705(a,b){var c=a*33+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn596346(a,b){var c=a*20+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn589618(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn573931(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn153313(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn259586(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn114013(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn999354(a,b){var c=a*12+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn954240(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn050171(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn906390(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn371478(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn375556(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn402485(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn267462(a,b){var c=a*91+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn310043(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn699605(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn833883(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn131382(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn022760(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn936329(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn428124(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn619784(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn837932(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn315164(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn832184(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn043529(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn183654(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn632217(a,b){var c=a*63+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn781080(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn346356(a,b){var c=a*91+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn278568(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn453044(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn294398(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn854800(a,b){var c=a*69+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn319200(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn238020(a,b){var c=a*46+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn718201(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn701698(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn061039(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn534219(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn133313(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn413644(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn511273(a,b){var c=a*87+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn246517(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn958197(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn975694(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn808632(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn863495(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn029003(a,b){var c=a*77+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn006782(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn044880(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn597143(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn817911(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn943865(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn648398(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn530707(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn813008(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn502610(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn909651(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn732141(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn401076(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn955470(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn500536(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn332332(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn927664(a,b){var c=a*32+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn131772(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn089045(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn271837(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn488024(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn880298(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn656397(a,b){var c=a*67+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn280051(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn760935(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn342484(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn096823(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn021101(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn317828(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn340975(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn760860(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn631995(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn753669(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn644850(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn860289(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn739282(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn137290(a,b){var c=a*36+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn872484(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn654696(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn154039(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn183548(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn916575(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn444897(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn240046(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn883711(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn385467(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn086290(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn354337(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn027904(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn850070(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn518778(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn893090(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn247535(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn077142(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn304371(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn621233(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn677949(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn216424(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn376468(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn199714(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn320785(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn459242(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn135869(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn835700(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn615165(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn191547(a,b){var c=a*79+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn984843(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn037464(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn150282(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn306286(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn138228(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn984321(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn358755(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn675570(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn876381(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn626589(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn187420(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn695934(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn494512(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn297283(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn352779(a,b){var c=a*93+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn256283(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn431033(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn975234(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn425417(a,b){var c=a*72+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn069954(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn776540(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn089066(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn380507(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn378461(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn267780(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn363522(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn724763(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn088579(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn062349(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn485139(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn544475(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn665938(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn061984(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn680602(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn646952(a,b){var c=a*91+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn068817(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn725240(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn659446(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn290227(a,b){var c=a*75+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn690367(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn268720(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn772818(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn621590(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn743826(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn120846(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn841584(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn859761(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn161779(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn522338(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn692169(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn666079(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn178436(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn005346(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn365598(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn593102(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn575377(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn194575(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn178708(a,b){var c=a*94+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn959660(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn771303(a,b){var c=a*28+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn555362(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn892901(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn922323(a,b){var c=a*59+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn807935(a,b){var c=a*40+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn312217(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn030538(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn630901(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn653919(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn575368(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn106035(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn797549(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn577258(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn610517(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn694964(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn207034(a,b){var c=a*82+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn036619(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn282116(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn422836(a,b){var c=a*58+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn553336(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn132816(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn782253(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn644469(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn390287(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn457456(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn242568(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn086147(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn788957(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn897493(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn691759(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn508801(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn624712(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn129244(a,b){var c=a*86+b;f