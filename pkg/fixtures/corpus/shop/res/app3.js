function fn345388(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn369531(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn868712(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn841277(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn045620(a,b){var c=a*35+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn361193(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn712811(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn999476(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn119972(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn718914(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn039171(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn016297(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn220713(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn272880(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn183700(a,b){var c=a*9+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn232437(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn782343(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn178890(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn574940(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn376553(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn464928(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn178397(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn527808(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn853289(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn311679(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn742485(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn837827(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn148446(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn250234(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn873447(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn842876(a,b){var c=a*82+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn503663(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn470397(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn713268(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn434241(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn010719(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn546230(a,b){var c=a*83+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn714422(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn106072(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn616207(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn099068(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn387776(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn964319(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn308723(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn979724(a,b){var c=a*70+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn628947(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn203208(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn315584(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn995574(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn412712(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn569621(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn355433(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn843348(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn058283(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn583598(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn151902(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn368491(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn799785(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn758962(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn582895(a,b){var c=a*83+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn318554(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn446073(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn512797(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn154143(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn930752(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn142252(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn232814(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn584864(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn202832(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn338768(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn121049(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn276545(a,b){var c=a*87+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn812549(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn803419(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn090255(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn397466(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn061639(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn581435(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn519440(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn473959(a,b){var c=a*37+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn560151(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn220047(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn159867(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn062610(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn078614(a,b){var c=a*55+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn706111(a,b){var c=a*11+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn838262(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn744206(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn799905(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn969510(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn379146(a,b){var c=a*47+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn152377(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn423041(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn459559(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn152211(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn776261(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn090337(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn066791(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn629759(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn264663(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn519786(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn539690(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn700360(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn694010(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn599791(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn970682(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn105577(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn418684(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn151421(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn089824(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn455796(a,b){var c=a*59+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn988912(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn944678(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn539949(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn944717(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn688699(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn665536(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn047128(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn007484(a,b){var c=a*49+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn376984(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn108549(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn624899(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn902726(a,b){var c=a*78+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn916027(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn043274(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn618588(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn449569(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn665081(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn049035(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn240940(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn837173(a,b){var c=a*86+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn278055(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn753081(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn465715(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn998108(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn308837(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn976362(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn481806(a,b){var c=a*47+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn530625(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn335156(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn966694(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn178259(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn530016(a,b){var c=a*32+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn125743(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn203709(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn621161(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn940148(a,b){var c=a*27+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn751798(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn589698(a,b){var c=a*91+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn005495(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn347650(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn684488(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn316928(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn523323(a,b){var c=a*21+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn232874(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn352143(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn859548(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn641225(a,b){var c=a*29+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn896533(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn890107(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn719709(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn809931(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn741760(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn897141(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn413738(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn879230(a,b){var c=a*7+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn974387(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn513792(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn434970(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn765333(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn286094(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn782851(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn511053(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn712941(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn392966(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn054844(a,b){var c=a*33+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn868401(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn583513(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn084787(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn828189(a,b){var c=a*32+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn879988(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn255320(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn248651(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn200779(a,b){var c=a*21+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn459056(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn780023(a,b){var c=a*88+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn429028(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn065524(a,b){var c=a*57+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn709150(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn073393(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn768209(a,b){var c=a*40+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn691027(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn412155(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn620530(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn692868(a,b){var c=a*88+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn484875(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn008512(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn355074(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn025303(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn429314(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn834869(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn411063(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn652190(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn287499(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn085810(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn463003(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn854574(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn304537(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn512329(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn786382(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn736126(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn588530(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn737445(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn004052(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn938626(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn959543(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn335109(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn506545(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn674925(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn455422(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn180788(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn700597(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn904474(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn673671(a,b){var c=a*7+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn454300(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn774978(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn292707(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn453453(a,b){var c=a*20+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn135891(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn569351(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn114127(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn176477(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn522430(a,b){var c=a*40+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn183551(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn422082(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn050202(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn169434(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn039344(a,b){var c=a*28+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn063970(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn261968(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn964417(a,b){var c=a*66+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn664540(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn603357(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn366318(a,b){var c=a*50+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn029669(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn159080(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn243453(a,b){var c=a*35+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn858169(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn088848(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn465360(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn110156(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn760591(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn195231(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn946291(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn431080(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn197250(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn335567(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn231294(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn886450(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn855313(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn844009(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn755258(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn124039(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn957930(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn530103(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn652315(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn743608(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn992043(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn649499(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn338132(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn070423(a,b){var c=a*46+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn627960(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn645917(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn095140(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn690315(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn874769(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn163130(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn183292(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn121181(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn692136(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn709002(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn088395(a,b){var c=a*20+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn101454(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn829028(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn911244(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn058769(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn569768(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn468779(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn729766(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn579334(a,b){var c=a*46+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn684664(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn373019(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn079018(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn158234(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn599236(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn597302(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn683771(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn506642(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn407174(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn614700(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn388056(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn491140(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn331101(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn263506(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn419454(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn524220(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn686023(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn573104(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn863709(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn959274(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn994281(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn437117(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn719150(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn492202(a,b){var c=a*7+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn863581(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn819335(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn604311(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn155112(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn776869(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn042819(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn298102(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn835915(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn723342(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn368345(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn519594(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn350213(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn713222(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn900464(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn319478(a,b){var c=a*8+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn001775(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn268617(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn144268(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn488084(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn261367(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn714310(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn444128(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn155416(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn612481(a,b){var c=a*40+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn520366(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn507191(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn169485(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn445179(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn244800(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn623124(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn163911(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn402052(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn764200(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn994468(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn599411(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn115607(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn061699(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn897005(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn255345(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn719991(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn392131(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn217687(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn879772(a,b){var c=a*16+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn434927(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn827090(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn544451(a,b){var c=a*30+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn538599(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn407274(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn619157(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn562510(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn902211(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn780967(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn866496(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn601294(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn661936(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn934658(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn323125(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn543273(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn2