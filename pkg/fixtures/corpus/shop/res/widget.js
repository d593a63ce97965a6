function fn505559(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn422369(a,b){var c=a*81+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn426663(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn638702(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn918079(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn105886(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn799083(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn152320(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn475145(a,b){var c=a*41+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn333408(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn346046(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn836150(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn553762(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn807360(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn581728(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn184811(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn621716(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn133430(a,b){var c=a*62+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn478482(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn531578(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn725986(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn991872(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn759371(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn423383(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn147848(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn117443(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn480396(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn219289(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn729406(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn572768(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn145846(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn570392(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn783666(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn455009(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn707842(a,b){var c=a*15+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn760873(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn228524(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn441200(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn405678(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn617107(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn018555(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn543351(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn971985(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn237634(a,b){var c=a*97+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn492575(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn095150(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn771307(a,b){var c=a*92+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn898606(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn038040(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn446753(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn783066(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn722845(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn429782(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn451206(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn022100(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn954780(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn113433(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn094783(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn123842(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn460243(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn554876(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn458910(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn102493(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn704403(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn383345(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn074138(a,b){var c=a*13+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn886677(a,b){var c=a*88+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn164545(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn388111(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn476683(a,b){var c=a*55+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn813652(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn010478(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn860496(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn881642(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn349576(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn615176(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn489039(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn336590(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn772566(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn388357(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn564670(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn336387(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn541270(a,b){var c=a*37+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn000389(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn474020(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn511490(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn248401(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn628336(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn245099(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn201278(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn931944(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn331459(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn586026(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn356282(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn819210(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn557765(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn646381(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn527733(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn977044(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn943080(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn583670(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn864882(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn999845(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn469648(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn647852(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn904132(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn583291(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn397882(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn936879(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn928755(a,b){var c=a*22+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn122873(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn843084(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn590776(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn251209(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn093340(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn336963(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn876364(a,b){var c=a*45+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn788856(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn258037(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn548878(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn745411(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn921156(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn808962(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn174217(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn663564(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn269997(a,b){var c=a*67+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn501030(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn129759(a,b){var c=a*93+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn485174(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn556447(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn944103(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn166508(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn360886(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn763500(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn292876(a,b){var c=a*95+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn802549(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn259564(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn862690(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn479071(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn421292(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn405851(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn675677(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn748927(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn367977(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn374240(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn581685(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn799674(a,b){var c=a*29+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn442305(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn876127(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn428672(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn397275(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn479944(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn397856(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn452533(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn545172(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn915972(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn182491(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn301516(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn923574(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn998319(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn621236(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn656965(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn181500(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn970785(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn382970(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn407315(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn563582(a,b){var c=a*63+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn413399(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn068397(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn367991(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn661154(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn349128(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn077384(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn554903(a,b){var c=a*74+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn991070(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn703664(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn851346(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn238862(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn415794(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn157193(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn437170(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn247389(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn685603(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn131915(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn861803(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn558045(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn594197(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn673146(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn405879(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn207816(a,b){var c=a*46+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn740733(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn450470(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn652399(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn604681(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn074862(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn096027(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn445834(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn350025(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn060946(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn509120(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn892964(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn508803(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn923895(a,b){var c=a*21+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn826353(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn889826(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn297842(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn930728(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn054295(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn929935(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn459262(a,b){var c=a*81+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn240035(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn625162(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn979092(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn587754(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn538021(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn246835(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn870083(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn414495(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn255786(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn411246(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn470674(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn246377(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn556839(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn581497(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn156641(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn486185(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn920949(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn419777(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn429897(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn348667(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn224076(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn012006(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn399661(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn244638(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn615921(a,b){var c=a*65+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn686906(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn771688(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn780041(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn526527(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn031096(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn670689(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn356307(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn821130(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn625886(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn549211(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn577553(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn280842(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn965252(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn639442(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn441641(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn765222(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn735712(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn270266(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn435232(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn314333(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn048738(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn083084(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn145113(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn196421(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn302097(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn238195(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn303947(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn054510(a,b){var c=a*49+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn334752(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn291073(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn802940(a,b){var c=a*14+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn774936(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn859402(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn006077(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn843947(a,b){var c=a*51+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn760503(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn521282(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn375653(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn643940(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn200552(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn651596(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn620739(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn016065(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn465236(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn270846(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn934648(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn771469(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn873988(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn299471(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn833145(a,b){var c=a*5+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn463933(a,b){var c=a*74+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn517705(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn056785(a,b){var c=a*78+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn816699(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn442877(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn316088(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn056410(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn335672(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn137936(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn157188(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn852100(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn264327(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn333818(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn331053(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn999030(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn670212(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn071328(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn379864(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn726670(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn439378(a,b){var c=a*33+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn989855(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn270045(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn629229(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn453077(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn575194(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn033170(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn902988(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn054473(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn491134(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn023856(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn586090(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn599263(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn866768(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn185893(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn561551(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn099369(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn438324(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn549574(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn065048(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn540618(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn683242(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn332211(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn756534(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn102574(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn130819(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn632718(a,b){var c=a*29+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn107401(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn182308(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn707336(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn597765(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn745679(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn290488(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn788114(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn478639(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn131655(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn244753(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn368647(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn478086(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn962161(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn068366(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn731982(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn388226(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn504810(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn741691(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn301015(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn486219(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn958527(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn927474(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn350253(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn436793(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn349817(a,b){var c=a*20+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn521770(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn064420(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn334551(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn704045(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn401311(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn765954(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn690298(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn089908(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn310337(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn384460(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn014185(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn991974(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn990668(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn797665(a,b){var c=a*36+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn017540(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn548085(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn531917(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn923731(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn683710(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn137385(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn997241(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn378700(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn419240(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn687829(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn046400(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn077647(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn340545(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn409347(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn895709(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn361589(a,b){var c=a*14+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn311684(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn046370(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn789643(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn788916(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn157697(a,b){var c=a*46+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn211909(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn496431(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn125654(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn802831(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn604289(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn037928(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn137880(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn510903(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn787417(a,b){var c=a*94+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn221041(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn538520(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn099464(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn007751(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn363614(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn178708(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn937781(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn906351(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn303310(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn052399(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn551086(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn908414(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn250524(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn645074(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn573890(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn116603(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn156483(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn055408(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn985977(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn020290(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn748778(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn592062(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn547137(a,b){var c=a*79+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn431512(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn768298(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn423548(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn592588(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn911434(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn391321(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn956505(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn130920(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn518110(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn447748(a,b){var c=a*63+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn201648(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn691557(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn738264(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn806622(a,b){var c=a*83+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn076499(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn247385(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn101318(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn126846(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn529852(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn809853(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn817978(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn314441(a,b){var c=a*53+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn703749(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn452683(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn814103(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn607548(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn423390(a,b){var c=a*13+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn827349(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn402177(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn915059(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn063636(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn644730(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn236441(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn677133(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn187051(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn808621(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn836413(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn019725(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn451893(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn664412(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn012529(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn401722(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn347308(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn170603(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn070701(a,b){var c=a*16+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn877297(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn719106(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn218693(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn726647(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn211180(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn653155(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn954255(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn308655(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn707652(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn175300(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn436119(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn587653(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn779434(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn567302(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn871438(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn250559(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn744023(a,b){var c=a*14+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn158028(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn628603(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn670654(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn387647(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn531042(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn991299(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn334453(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn371709(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn932298(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn066186(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn168952(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn224541(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn510318(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn224691(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn299019(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn379994(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn637035(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn087293(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn652327(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn447497(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=