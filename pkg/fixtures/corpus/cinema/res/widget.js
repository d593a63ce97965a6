function fn621139(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn058125(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn575291(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn720357(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn381018(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn624325(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn741569(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn410521(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn424327(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn522793(a,b){var c=a*47+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn244349(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn884970(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn066613(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn257424(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn830139(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn125407(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn604013(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn827638(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn630749(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn519187(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn734266(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn230018(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn531147(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn186497(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn864227(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn259193(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn917923(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn230597(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn748264(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn491322(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn864588(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn992260(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn507219(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn499267(a,b){var c=a*64+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn054561(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn451196(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn451731(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn101745(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn687872(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn234316(a,b){var c=a*70+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn646288(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn602615(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn721560(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn994041(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn719131(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn401697(a,b){var c=a*51+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn158619(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn215854(a,b){var c=a*97+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn142423(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn965709(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn157438(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn541978(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn707059(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn987563(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn477716(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn151746(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn588169(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn253036(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn609488(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn588265(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn562082(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn981628(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn551708(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn576988(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn438230(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn798093(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn509616(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn768251(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn289903(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn021711(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn303821(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn377562(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn917637(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn773269(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn376540(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn198862(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn717720(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn950646(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn873986(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn487888(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn598881(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn171065(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn570329(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn671303(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn929688(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn073457(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn595949(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn787011(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn296788(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn096086(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn978239(a,b){var c=a*46+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn298596(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn647285(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn822508(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn480376(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn886992(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn531310(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn589581(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn630360(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn929602(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn137949(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn324052(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn522924(a,b){var c=a*80+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn310008(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn917161(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn789976(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn871983(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn722946(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn404886(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn115787(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn736463(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn031094(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn551390(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn655575(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn493177(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn459204(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn053376(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn693188(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn068205(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn292418(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn918587(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn952907(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn161041(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn222431(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn698531(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn884931(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn421473(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn011772(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn597210(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn004778(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn541690(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn676787(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn383789(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn457894(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn919001(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn226651(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn004144(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn390823(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn762675(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn571069(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn373531(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn469380(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn084486(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn403623(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn482761(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn410566(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn876750(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn180632(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn711607(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn797203(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn060043(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn882790(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn497966(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn601023(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn849029(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn719499(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn995332(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn948794(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn427163(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn344467(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn151690(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn479188(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn397380(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn300078(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn600775(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn373736(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn946774(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn535967(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn565681(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn053647(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn053002(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn365633(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn444796(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn460431(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn385905(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn847968(a,b){var c=a*19+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn778760(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn353764(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn365595(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn307363(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn621753(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn639673(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn307117(a,b){var c=a*68+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn020298(a,b){var c=a*47+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn374902(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn844921(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn728409(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn280709(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn739481(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn249160(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn887249(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn927123(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn735507(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn635658(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn232312(a,b){var c=a*57+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn390502(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn208576(a,b){var c=a*96+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn095167(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn275933(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn193102(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn759406(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn167768(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn927427(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn841118(a,b){var c=a*42+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn349954(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn426127(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn553710(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn405166(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn156992(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn871012(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn672635(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn840565(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn585930(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn787377(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn109613(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn483355(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn852679(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn853777(a,b){var c=a*64+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn669027(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn549092(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn235296(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn867239(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn392107(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn175987(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn164751(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn386494(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn404543(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn608925(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn581171(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn270099(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn470416(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn942437(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn552980(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn782416(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn636655(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn384137(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn670999(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn682373(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn202838(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn732669(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn577387(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn250602(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn445487(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn073688(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn952366(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn775826(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn516051(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn602932(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn712441(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn378889(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn778336(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn091173(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn001425(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn325746(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn015363(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn937948(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn087267(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn109074(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn245812(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn334153(a,b){var c=a*46+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn959288(a,b){var c=a*25+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn564077(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn983840(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn572351(a,b){var c=a*63+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn194038(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn688203(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn302977(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn610838(a,b){var c=a*28+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn697660(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn896043(a,b){var c=a*55+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn066539(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn968027(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn606968(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn851271(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn861344(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn465674(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn468917(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn143311(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn354953(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn466606(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn753916(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn911091(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn502680(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn115792(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn355515(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn887578(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn280638(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn088399(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn423645(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn730173(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn941832(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn307213(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn470806(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn294897(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn264158(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn522619(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn274671(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn371821(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn041049(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn319793(a,b){var c=a*31+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn303263(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn145287(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn120990(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn069375(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn672049(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn351390(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn321403(a,b){var c=a*60+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn475969(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn851405(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn440434(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn899794(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn828063(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn836684(a,b){var c=a*12+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn554642(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn170064(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn488349(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn118847(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn536170(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn325372(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn093722(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn322286(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn016599(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn177719(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn078277(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn433407(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn622989(a,b){var c=a*21+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn310446(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn575496(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn490330(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn282530(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn682698(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn441868(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn541176(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn994563(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn945517(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn609012(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn009921(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn623205(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn224019(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn841629(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn425747(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn539813(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn328308(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn205571(a,b){var c=a*78+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn008968(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn496190(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn723972(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn641967(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn476639(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn938247(a,b){var c=a*97+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn713867(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn358118(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn715217(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn430782(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn995550(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn893604(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn907226(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn226845(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn590000(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn567330(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn342105(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn341783(a,b){var c=a*60+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn529912(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn820411(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn664628(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn625050(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn801687(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn351546(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn899480(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn700588(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn991940(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn526144(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn044601(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn287920(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn598609(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn667504(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn749880(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn338627(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn336016(a,b){var c=a*3+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn725763(a,b){var c=a*71+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn242773(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn398349(a,b){var c=a*80+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn689164(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn434606(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn918821(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn066855(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn482970(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn323444(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn860984(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn251429(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn659591(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn276365(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn339317(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn398463(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn237939(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn496422(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn217368(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn866495(a,b){var c=a*39+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn518504(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn852198(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn101764(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn556425(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn132424(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn740304(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn461166(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn569305(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn120489(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn651536(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn498206(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn311225(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn825836(a,b){var c=a*51+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn270943(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn952600(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn966972(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn628325(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn059652(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn819824(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn522528(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn112823(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn942560(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn694146(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn712868(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn464803(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn751943(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn265450(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn432118(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn619105(a,b){var c=a*69+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn034589(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn155853(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn951403(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn467099(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn433816(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn567432(a,b){var c=a*16+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn034603(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn384038(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn744491(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn820024(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn259021(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn709860(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn339484(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn222847(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn618517(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn712765(a,b){var c=a*68+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn133155(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn424382(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn508097(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn396463(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn883154(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn987148(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn616841(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn030557(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn702905(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn552843(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn480831(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn600660(a,b){var c=a*18+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn199396(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn820618(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn040381(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn311496(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn815953(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn362904(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn234988(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn912318(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn003826(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn794216(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn246204(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn697504(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn383774(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn485670(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn176060(a,b){var c=a*88+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn071543(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn850073(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn761897(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn629004(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn566186(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn936401(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn434103(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn704411(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn085261(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn276072(a,b){var c=a*67+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn810168(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn301480(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn583391(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn485268(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn017512(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn996848(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn058478(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn449236(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn623736(a,b){var c=a*8+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn237674(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn655935(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn925786(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn971560(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn336053(a,b){var c=a*76+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn168141(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn198666(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn237799(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn226701(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn895200(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn073591(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn148524(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn785974(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn942338(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn811184(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn053387(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn8005