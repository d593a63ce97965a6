function fn398052(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn120525(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn162295(a,b){var c=a*96+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn076638(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn554256(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn428372(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn088213(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn259227(a,b){var c=a*43+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn390106(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn648903(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn528607(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn951617(a,b){var c=a*21+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn532072(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn228628(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn049924(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn934667(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn153738(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn111243(a,b){var c=a*40+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn825920(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn924045(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn136472(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn182967(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn898661(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn670714(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn705411(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn096711(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn445974(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn262809(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn454349(a,b){var c=a*14+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn872335(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn281793(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn062544(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn320544(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn870506(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn539263(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn734919(a,b){var c=a*41+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn839305(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn187446(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn659901(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn304289(a,b){var c=a*10+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn535321(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn888401(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn282567(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn142120(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn451533(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn366686(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn465200(a,b){var c=a*68+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn718508(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn481655(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn554660(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn448045(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn976685(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn447229(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn781169(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn146171(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn436484(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn834406(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn794010(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn486986(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn743348(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn112318(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn714648(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn378553(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn341524(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn012508(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn135765(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn756160(a,b){var c=a*44+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn305787(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn693818(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn092157(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn444384(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn767551(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn552528(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn346294(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn963534(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn545740(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn841858(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn527922(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn069002(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn583588(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn761349(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn304131(a,b){var c=a*62+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn074001(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn435414(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn476616(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn093855(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn198122(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn786334(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn195165(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn797862(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn808291(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn169583(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn680784(a,b){var c=a*84+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn599702(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn426183(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn837748(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn457587(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn221590(a,b){var c=a*67+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn477367(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn107844(a,b){var c=a*52+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn958915(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn285971(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn842402(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn864586(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn175271(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn298160(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn196809(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn688570(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn176404(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn262821(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn262257(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn298894(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn644516(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn921732(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn497099(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn614557(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn193581(a,b){var c=a*73+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn482182(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn787894(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn252499(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn362907(a,b){var c=a*87+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn264147(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn095027(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn409890(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn949361(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn651970(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn328084(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn509280(a,b){var c=a*74+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn278096(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn466681(a,b){var c=a*80+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn920794(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn505040(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn630222(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn259079(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn808054(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn391723(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn526545(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn815546(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn554074(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn984801(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn157430(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn539009(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn204377(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn030472(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn407963(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn444515(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn605716(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn276338(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn070748(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn176891(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn774325(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn008399(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn262185(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn912694(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn304204(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn101972(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn584526(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn403695(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn218713(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn177747(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn175603(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn744001(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn227342(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn435635(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn377253(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn218083(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn649967(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn841392(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn147926(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn813708(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn229283(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn722567(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn786309(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn028213(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn099104(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn940056(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn459587(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn081636(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn848506(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn895839(a,b){var c=a*22+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn055119(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn643387(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn497005(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn805016(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn949005(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn273193(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn164626(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn658123(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn090196(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn337693(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn990600(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn625605(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn970550(a,b){var c=a*65+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn542088(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn920231(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn322743(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn342526(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn824437(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn057034(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn662424(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn589858(a,b){var c=a*8+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn177958(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn995022(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn509973(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn779756(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn645608(a,b){var c=a*7+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn898870(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn385601(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn003184(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn710405(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn451337(a,b){var c=a*29+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn351872(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn368684(a,b){var c=a*46+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn219847(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn908945(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn199578(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn312244(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn000844(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn338812(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn863669(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn201026(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn069724(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn517089(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn855436(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn779539(a,b){var c=a*63+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn126382(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn206300(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn971100(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn899244(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn877217(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn806056(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn712385(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn424089(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn968531(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn613861(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn524115(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn260865(a,b){var c=a*47+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn335818(a,b){var c=a*30+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn009576(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn084474(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn778798(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn222202(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn804375(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn129619(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn703278(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn239876(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn086249(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn312964(a,b){var c=a*87+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn122987(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn925477(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn691386(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn512575(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn092907(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn172939(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn536955(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn787113(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn387996(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn048839(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn455338(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn395540(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn349932(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn549297(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn184178(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn588237(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn617867(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn095637(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn874860(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn995737(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn260823(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn484206(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn757563(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn825677(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn422116(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn377676(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn707335(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn421979(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn678577(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn090515(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn234297(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn139306(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn688106(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn437881(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn625852(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn085680(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn564422(a,b){var c=a*82+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn350857(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn343525(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn812976(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn237040(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn405429(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn594875(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn071687(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn039649(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn533899(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn772109(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn364708(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn172672(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn665632(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn811877(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn954829(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn678579(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn205817(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn373649(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn552433(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn630596(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn319393(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn605203(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn173022(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn531448(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn372256(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn583323(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn555434(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn943117(a,b){var c=a*71+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn694281(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn658042(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn661744(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn382179(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn713997(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn029360(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn598883(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn322883(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn684932(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn259972(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn100717(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn210342(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn535610(a,b){var c=a*32+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn539747(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn195684(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn074892(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn562668(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn099052(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn110290(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn417646(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn173116(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn390378(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn649541(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn278275(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn949610(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn707730(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn702832(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn341543(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn202016(a,b){var c=a*88+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn531366(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn484526(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn479195(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn035624(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn824303(a,b){var c=a*18+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn622462(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn446096(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn684511(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn377572(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn058261(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn830679(a,b){var c=a*52+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn775773(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn730105(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn381478(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn162538(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn747785(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn967806(a,b){var c=a*18+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn688555(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn635215(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn100172(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn407748(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn945154(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn030699(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn286706(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn550230(a,b){var c=a*87+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn759376(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn668728(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn876563(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn237694(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn773374(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn824484(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn942951(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn473983(a,b){var c=a*71+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn336180(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn178739(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn310961(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn717570(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn043669(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn009319(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn840762(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn385435(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn378604(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn301742(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn533139(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn024336(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn539865(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn990583(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn100347(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn858645(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn757627(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn507599(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn037123(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn518884(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn090463(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn940722(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn617598(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn205248(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn674609(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn368900(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn010153(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn238319(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn202830(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn630422(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn640534(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn019623(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn906097(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn494104(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn465750(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn658478(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn957739(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn951827(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn469066(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn646287(a,b){var c=a*22+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn667362(a,b){var c=a*21+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn644311(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn433918(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn710687(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn781661(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn854148(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn821178(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn309820(a,b){var c=a*82+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn923643(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn586554(a,b){var c=a*96+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn577671(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn866770(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn997001(a,b){var c=a*82+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn606860(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn248776(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn207695(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn524039(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn667657(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn465881(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn027993(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn192352(a,b){var c=a*46+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn711967(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn990198(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn157306(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn186545(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn442793(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn707822(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn562187(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn260624(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn681740(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn422108(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn801302(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn287891(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn458665(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn336043(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn143842(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn623669(a,b){var c=a*4+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn928590(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn026018(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn669806(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn262333(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn002073(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn381572(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn333280(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn985495(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn910571(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn865168(a,b){var c=a*38+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn703932(a,b){var c=a*50+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn833992(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn344422(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn396519(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn290919(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn467991(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn956085(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn473500(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn397896(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn704672(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn463484(a,b){var c=a*59+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn790133(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn695218(a,b){var c=a*34+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn987894(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn222718(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn998500(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn208535(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn751905(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn427877(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn588176(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn736737(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn606768(a,b){var c=a*7+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn892081(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn093411(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn599847(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn154747(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn896514(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn735551(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn671981(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn909525(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn677718(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn672160(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn226154(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn064193(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn681715(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn587610(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn758321(a,b){var c=a*68+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn633774(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn159774(a,b){var c=a*60+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn015449(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn622466(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn665264(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn984820(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn230681(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn335686(a,b){var c=a*18+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn804947(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn802662(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn833068(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn206735(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn627176(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn339576(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn520150(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn211093(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn066367(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn256135(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn994474(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn572065(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn577345(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn217025(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn376859(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn717071(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn113091(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn656314(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn142668(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn142712(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn329579(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn794285(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn285728(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn005613(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn615363(a,b){var c=a*77+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn196138(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn318897(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn389751(a,b){var c=a*45+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn228545(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn377016(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn029789(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn798185(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn421250(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn298786(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn898406(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn212000(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn415579(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn543023(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn960758(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn404842(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn624773(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn409207(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn182136(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn775245(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn426948(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn358059(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn829883(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn703281(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn418898(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn273805(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn156895(a,b){var c=a*57+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn241472(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn083689(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn318447(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn554822(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn493397(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn722254(a,b){var c=a*24+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn700556(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn220395(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn301369(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn320269(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn174667(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn455536(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn009808(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn424447(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn341357(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn845678(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn013266(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn669903(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn979131(a,b){var c=a*23+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn703170(a,b){var c=a*16+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn571762(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn284138(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn798218(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn495054(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn336447(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn665776(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn239692(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn660887(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn265056(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn367401(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn214386(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn485382(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn769240(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn701286(a,b){var c=a*12+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn199637(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn741144(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn246631(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn001278(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn892362(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn991627(a,b){var c=a*97+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn773184(a,b){var c=a*64+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn938206(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn180585(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn325522(a,b){var c=a*7+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn385522(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn563120(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn289858(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn068058(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn833777(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn467377(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn411459(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn154299(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn752036(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn255882(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn090429(a,b){var c=a*28+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn405143(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn793119(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn067576(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn033150(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn266488(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn624369(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn960742(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn991061(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn453561(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn112260(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn900227(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn708359(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn019279(a,b){var c=a*97+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn414627(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn003894(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn663759(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn246397(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn940615(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn808098(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn261850(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn262410(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn266563(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn310601(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn635388(a,b){var c=a*87+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn027834(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn642738(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn713313(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn837199(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn888309(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn613514(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn362591(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn257028(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn521185(a,b){var c=a*34+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn104535(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn492222(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn355980(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn141944(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn070126(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn549762(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn264782(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn898864(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn288987(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn115614(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn318277(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn301479(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn386680(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn438735(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn023396(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn115785(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn738216(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn909998(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn607832(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn190453(a,b){var c=a*77+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn514687(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn876141(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn805764(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn043016(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn574677(a,b){var c=a*44+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn039313(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn529871(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn018412(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn016902(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn467588(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn897343(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn965186(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn041004(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn068218(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn751764(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn269779(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn172990(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn376256(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn053502(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn751659(a,b){var c=a*71+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn234302(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn119581(a,b){var c=a*29+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn784945(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn306617(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn625186(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn901849(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn563495(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn603355(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn963302(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn917768(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn882178(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn834270(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn976537(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn994357(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn871338(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn582735(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn871211(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn977362(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn591244(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn597629(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn608986(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn353496(a,b){var c=a*88+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn051105(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn289770(a,b){var c=a*76+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn478110(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn075179(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn922018(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn160768(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn142126(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn217042(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn142310(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn761854(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn425323(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn622248(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn547736(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn884679(a,b){var c=a*44+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn202201(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn717020(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn683767(a,b){var c=a*7+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn821801(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn293980(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn667684(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn161092(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn592079(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn647328(a,b){var c=a*81+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn149584(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn053060(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn245332(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn638797(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn482218(a,b){var c=a*94+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn707140(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn048161(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn875010(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn626391(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn777731(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn844236(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn468882(a,b){var c=a*29+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn687073(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn007503(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn742023(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn403466(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn491675(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn097626(a,b){var c=a*15+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn413833(a,b){var c=a*73+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn041107(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn586936(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn226365(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn161201(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn000543(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn271229(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn412527(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn863225(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn502288(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn502590(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn238883(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn546373(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn744055(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn226673(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn864503(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn810741(a,b){var c=a*49+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn811721(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn381132(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn123987(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn037825(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn505992(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn060605(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn834465(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn106785(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn047465(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn501888(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn580826(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn384278(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn101828(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn176600(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn601388(a,b){var c=a*56+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn019058(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn985820(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn411676(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn413220(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn104927(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn370381(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn110395(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn757200(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn646428(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn401066(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn395725(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn976945(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn632573(a,b){var c=a*41+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn342114(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn634968(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn951512(a,b){var c=a*44+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn982566(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn616653(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn438931(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn219079(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn055205(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn118717(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn503696(a,b){var c=a*73+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn630970(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn217936(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn345354(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn101227(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn109511(a,b){var c=a*84+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn094381(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn138299(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn696658(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn410501(a,b){var c=a*55+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn425009(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn351837(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn947650(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn054107(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn696692(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn619385(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn229784(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn419004(a,b){var c=a*17+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn461282(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn765733(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn461389(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn144798(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn196618(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn008819(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn438191(a,b){var c=a*34+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn198304(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn762097(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn944978(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn972084(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn111337(a,b){var c=a*67+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn700977(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn702279(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn519606(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn156023(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn904688(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn468784(a,b){var c=a*71+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn704727(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn545851(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn368118(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn645985(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn822391(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn012064(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn463826(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn690422(a,b){var c=a*57+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn893702(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn558562(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn860489(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn703544(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn098879(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn585850(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn493622(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn240959(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn762272(a,b){var c=a*35+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn198736(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn653843(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn838005(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn932625(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn397141(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn577488(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn519376(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn463949(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn436002(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn834180(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn374909(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn325660(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn407084(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn344062(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn880778(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn900350(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn314276(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn175818(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn771129(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn722127(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn365142(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn749444(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn365082(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn941994(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn074662(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn369935(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn148142(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn354936(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn855047(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn081959(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn016464(a,b){var c=a*92+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn478027(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn360887(a,b){var c=a*63+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn990347(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn925363(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn599670(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn779254(a,b){var c=a*80+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn855327(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn852737(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn163373(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn109701(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn012894(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn517517(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn294924(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn158267(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn859961(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn074078(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn121367(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn681384(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn132459(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn781949(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn186132(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn079935(a,b){var c=a*95+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn632285(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn487589(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn107775(a,b){var c=a*25+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn320013(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn316315(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn171852(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn090383(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn489384(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn367928(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn336528(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn241011(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn708241(a,b){var c=a*37+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn452160(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn153656(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn610420(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn383791(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn896713(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn175367(a,b){var c=a*58+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn962363(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn438847(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn644126(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn757994(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn707060(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn811237(a,b){var c=a*33+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn449896(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn787270(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn252227(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn930252(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn018067(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn770627(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn410886(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn176319(a,b){var c=a*46+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn077660(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn470905(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn622314(a,b){var c=a*50+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn898366(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn473368(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn988176(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn780163(a,b){var c=a*25+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn705162(a,b){var c=a*25+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn407017(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn580050(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn850485(a,b){var c=a*8+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn706497(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn115809(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn093861(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn186302(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn372170(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn889166(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn418107(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn002382(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn450997(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn260723(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn075423(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn429772(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn873454(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn984107(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn664483(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn310215(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn841476(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn332798(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn351599(a,b){var c=a*62+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn284656(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn078218(a,b){var c=a*62+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn433393(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn519325(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn169253(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn068737(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn645664(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn648772(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn943081(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn870528(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn983733(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn169221(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn170554(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn630003(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn028119(a,b){var c=a*49+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn082751(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn059229(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn366772(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn897176(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn202726(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn319790(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn797619(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn534960(a,b){var c=a*48+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn001792(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn245520(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn136339(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn044247(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn441383(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn009915(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn623897(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn604675(a,b){var c=a*74+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn713370(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn200081(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn434429(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn210029(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn534455(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn980115(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn535451(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn164335(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn251374(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn752328(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn517772(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn624781(a,b){var c=a*76+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn946773(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn223706(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn385327(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn840628(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn458943(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn353134(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn522490(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn368649(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn486539(a,b){var c=a*73+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn881389(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn892102(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn637120(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn851904(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn583214(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn670530(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn519251(a,b){var c=a*12+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn449049(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn760688(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn171202(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn777901(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn011369(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn584541(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn232121(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn488835(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn472113(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn162642(a,b){var c=a*87+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn285286(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn420760(a,b){var c=a*2+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn110479(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn610802(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn232782(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn690404(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn700901(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn591633(a,b){var c=a*71+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn551366(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn874865(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn795670(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn466415(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn494517(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn843217(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn711042(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn456545(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn198246(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn603772(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn325738(a,b){var c=a*44+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn605290(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn624907(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn625229(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn289804(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn246422(a,b){var c=a*29+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn540704(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn867766(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn795698(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn954712(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn547161(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn300308(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn192143(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn558795(a,b){var c=a*45+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn763994(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn392685(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn691467(a,b){var c=a*72+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn593132(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn746221(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn592638(a,b){var c=a*51+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn789064(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn384527(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn790948(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn031402(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn477248(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn887539(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn985962(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn984389(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn243450(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn489452(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn454076(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn240532(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn509146(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn849258(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn496610(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn439403(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn652264(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn768562(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn694609(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn434299(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn975529(a,b){var c=a*24+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn313768(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn179811(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn900244(a,b){var c=a*48+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn834818(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn866546(a,b){var c=a*34+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn731052(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn136361(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn792645(a,b){var c=a*79+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn590449(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn309584(a,b){var c=a*46+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn964888(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn349921(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn032880(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn715631(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn799164(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn660485(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn871190(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn391349(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn852485(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn106155(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn006427(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn966932(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn972716(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn435336(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn643167(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn467235(a,b){var c=a*67+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn989112(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn148519(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn151098(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn041960(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn488382(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn097396(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn463891(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn634493(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn436118(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn842783(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn960311(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn280708(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn916300(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn375635(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn024558(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn162209(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn752473(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn348246(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn380069(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn161429(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn312210(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn669053(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn842717(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn231947(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn324362(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn619168(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn535213(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn791752(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn891585(a,b){var c=a*75+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn480603(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn862229(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn526511(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn781767(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn256058(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn684423(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn993465(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn180536(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn176408(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn891526(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn993183(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn446405(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn312100(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn315601(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn591270(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn843268(a,b){var