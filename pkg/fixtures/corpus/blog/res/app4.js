function fn039050(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn768049(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn066146(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn018349(a,b){var c=a*95+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn081023(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn226416(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn611818(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn629094(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn277286(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn530389(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn270670(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn896945(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn800879(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn644853(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn975399(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn815408(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn959778(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn504131(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn659119(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn508724(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn772662(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn497801(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn141219(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn770541(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn760896(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn951475(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn705169(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn834471(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn024053(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn734092(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn990112(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn383343(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn507948(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn049753(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn549451(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn458379(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn588827(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn106000(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn921549(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn115668(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn244232(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn822901(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn806330(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn042636(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn306832(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn727155(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn593018(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn567415(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn932083(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn279252(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn789672(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn240136(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn835435(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn357030(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn372674(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn187757(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn435641(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn724246(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn802328(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn557850(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn572970(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn333562(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn115028(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn503238(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn381582(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn851800(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn395370(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn005550(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn893350(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn870862(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn683492(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn976819(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn104126(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn129777(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn775537(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn000002(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn557338(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn787163(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn596439(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn790233(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn270592(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn781981(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn785831(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn588806(a,b){var c=a*70+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn843699(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn311992(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn263603(a,b){var c=a*42+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn873907(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn414336(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn540913(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn951156(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn479115(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn776556(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn838441(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn012188(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn527619(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn565880(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn584838(a,b){var c=a*21+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn840019(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn333044(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn992939(a,b){var c=a*94+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn689014(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn976063(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn336060(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn188899(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn936057(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn369036(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn889113(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn491268(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn782344(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn635473(a,b){var c=a*21+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn805911(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn281282(a,b){var c=a*16+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn243515(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn692985(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn654910(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn984245(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn107893(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn785882(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn076906(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn622426(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn372663(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn233431(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn676786(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn775295(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn694508(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn369719(a,b){var c=a*50+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn807115(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn862814(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn758445(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn121440(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn460742(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn334932(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn295950(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn185245(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn774756(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn566681(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn297617(a,b){var c=a*76+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn167711(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn523249(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn343033(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn485306(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn861336(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn627520(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn438681(a,b){var c=a*59+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn445339(a,b){var c=a*47+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn273209(a,b){var c=a*55+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn772525(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn980550(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn448343(a,b){var c=a*96+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn792437(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn016092(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn402709(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn562088(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn813882(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn778535(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn208050(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn086200(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn778464(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn559974(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn113326(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn368244(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn617704(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn627103(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn941561(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn443710(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn357309(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn276391(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn310122(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn594675(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn414458(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn424143(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn924266(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn169955(a,b){var c=a*87+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn521030(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn758141(a,b){var c=a*20+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn956440(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn817691(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn827617(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn920113(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn430086(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn222171(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn355036(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn348670(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn758467(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn211757(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn627384(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn187782(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn917725(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn602280(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn140040(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn810433(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn623017(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn075799(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn920129(a,b){var c=a*75+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn395306(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn579836(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn083766(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn620707(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn448872(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn498321(a,b){var c=a*21+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn939466(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn531212(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn097963(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn945965(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn387681(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn261325(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn847616(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn702622(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn026513(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn355368(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn951991(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn016289(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn866395(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn257203(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn454630(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn934769(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn488541(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn737439(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn386042(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn816758(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn802858(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn235053(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn521494(a,b){var c=a*49+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn601987(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn046345(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn287861(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn383792(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn998573(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn623900(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn801726(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn453576(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn262579(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn439223(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn317596(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn099299(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn668903(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn860376(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn016485(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn430778(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn045715(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn127856(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn701331(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn945679(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn059721(a,b){var c=a*94+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn008158(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn502816(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn475906(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn091904(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn824984(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn253473(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn713170(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn090107(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn312696(a,b){var c=a*81+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn789783(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn096156(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn308659(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn154738(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn856621(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn242115(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn608296(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn382936(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn511414(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn004091(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn307226(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn921944(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn844027(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn357223(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn623639(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn093706(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn047580(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn161269(a,b){var c=a*54+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn206215(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn785967(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn964171(a,b){var c=a*90+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn231044(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn639729(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn126100(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn781591(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn648971(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn508035(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn115349(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn929460(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn300918(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn093886(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn327827(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn511022(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn391193(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn309372(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn567999(a,b){var c=a*71+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn758233(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn722858(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn112191(a,b){var c=a*5+b;