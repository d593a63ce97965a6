function fn703525(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn335936(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn317490(a,b){var c=a*47+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn707107(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn462953(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn723803(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn697233(a,b){var c=a*66+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn202732(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn694890(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn311825(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn046825(a,b){var c=a*86+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn541636(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn175725(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn303683(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn584673(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn210759(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn964289(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn788469(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn442958(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn602147(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn516691(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn103142(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn876797(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn884076(a,b){var c=a*17+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn066826(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn921531(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn384390(a,b){var c=a*23+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn402592(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn340904(a,b){var c=a*91+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn932914(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn710932(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn524872(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn868002(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn382199(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn681910(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn050311(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn182856(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn221323(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn737097(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn535099(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn873397(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn046186(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn919938(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn082001(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn865746(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn833907(a,b){var c=a*23+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn890283(a,b){var c=a*47+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn393601(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn666851(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn536439(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn874232(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn161677(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn276154(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn049156(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn496228(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn976437(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn782802(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn000653(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn367383(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn693306(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn512500(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn507101(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn612607(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn976806(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn383988(a,b){var c=a*11+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn586664(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn791771(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn173786(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn864946(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn171944(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn347361(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn064509(a,b){var c=a*97+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn141557(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn051786(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn406324(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn906183(a,b){var c=a*69+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn812061(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn626662(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn083410(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn042877(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn497147(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn913904(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn067424(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn352354(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn146019(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn357687(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn272937(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn615147(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn339729(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn971828(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn205613(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn600115(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn604097(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn465467(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn969886(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn276704(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn854629(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn506228(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn554585(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn686314(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn612674(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn807431(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn478777(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn626069(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn255318(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn449710(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn871888(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn867075(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn513477(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn116839(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn695503(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn493389(a,b){var c=a*67+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn700168(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn054730(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn352200(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn876630(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn021124(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn560730(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn016455(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn760394(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn276969(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn882471(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn348522(a,b){var c=a*57+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn926892(a,b){var c=a*16+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn725067(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn433807(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn281677(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn986433(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn955855(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn184940(a,b){var c=a*55+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn705780(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn039021(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn867066(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn815890(a,b){var c=a*46+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn708365(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn496925(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn524528(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn128841(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn427774(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn762126(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn583950(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn894185(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn534435(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn881401(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn968126(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn628272(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn063421(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn655231(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn923947(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn210568(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn251951(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn637904(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn114157(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn464480(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn715957(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn337328(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn665110(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn596310(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn163863(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn941810(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn619020(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn667794(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn947000(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn227076(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn804250(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn439687(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn785558(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn920499(a,b){var c=a*31+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn057347(a,b){var c=a*3+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn804069(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn188368(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn939942(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn045035(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn985173(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn985476(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn385043(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn501620(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn026731(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn340269(a,b){var c=a*94+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn093111(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn731522(a,b){var c=a*4+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn129475(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn391785(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn859448(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn711958(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn398341(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn357529(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn653145(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn790573(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn780302(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn794774(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn564506(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn176403(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn529237(a,b){var c=a*84+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn290374(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn129576(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn485505(a,b){var c=a*82+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn975565(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn830721(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn043306(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn448010(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn592764(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn201778(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn937357(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn067540(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn514783(a,b){var c=a*28+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn178953(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn878862(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn091392(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn170542(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn175910(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn555089(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn291603(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn567862(a,b){var c=a*11+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn447671(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn602741(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn783596(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn519465(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn587173(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn685439(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn729262(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn612688(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn625565(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn783454(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn637938(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn515178(a,b){var c=a*56+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn957883(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn987473(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn791391(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn105076(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn929775(a,b){var c=a*57+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn147534(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn824931(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn143760(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn603029(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn611133(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn518215(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn368049(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn390359(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn203214(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn406896(a,b){var c=a*29+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn373578(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn938167(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn534480(a,b){var c=a*12+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn778688(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn366921(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn973391(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn894648(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn076143(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn155273(a,b){var c=a*84+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn490302(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn230625(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn425331(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn810655(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn267657(a,b){var c=a*36+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn961604(a,b){var c=a*95+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn544271(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn593503(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn063597(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn912266(a,b){var c=a*28+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn931087(a,b){var c=a*16+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn671396(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn581591(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn262139(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn668994(a,b){var c=a*58+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn746620(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn292124(a,b){var c=a*49+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn478280(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn406869(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn237616(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn698482(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn561142(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn406914(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn476746(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn609297(a,b){var c=a*73+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn535730(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn177998(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn419591(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn895466(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn662197(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn098569(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn684163(a,b){var c=a*50+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn768349(a,b){var c=a*30+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn256825(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn524769(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn125510(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn103726(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn803496(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn577003(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn786934(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn674946(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn293167(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn768224(a,b){var c=a*55+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn357129(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn811239(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn551058(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn669133(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn760009(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn631411(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn594737(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn364774(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn533785(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn062233(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn124400(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn829489(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn322236(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn654742(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn828494(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn472821(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn337044(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn118094(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn320805(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn537528(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn139384(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn230399(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn435175(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn787875(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn216138(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn521710(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn354327(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn605080(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn146530(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn473206(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn694210(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn496966(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn897946(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn312967(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn054454(a,b){var c=a*15+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn211917(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn835098(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn421244(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn884925(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn033298(a,b){var c=a*58+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn038692(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn903281(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn824966(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn441970(a,b){var c=a*28+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn445597(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn349245(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn914725(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn271263(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn261965(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn572816(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn070439(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn299887(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn920451(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn225584(a,b){var c=a*89+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn259686(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn027435(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn950785(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn186566(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn154499(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn020222(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn780709(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn467306(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn866761(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn121691(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn027170(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn981218(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn365156(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn180992(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn059368(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn200268(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn668228(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn289871(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn332007(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn666832(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn314554(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn346045(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn299318(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn268991(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn360024(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn924005(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn188589(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn770564(a,b){var c=a*6+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn663270(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn786318(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn869230(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn645868(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn588283(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn614278(a,b){var c=a*16+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn716097(a,b){var c=a*19+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn166930(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn127379(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn841238(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn742229(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn340676(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn728019(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn399953(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn912444(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn636349(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn726345(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn211384(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn002415(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn923455(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn872764(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn413481(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn205046(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn