function fn145300(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn413589(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn384343(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn206741(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn200018(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn301852(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn285973(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn918550(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn929392(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn817078(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn474588(a,b){var c=a*37+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn115494(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn782746(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn128395(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn396693(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn555832(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn774942(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn204366(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn070194(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn551892(a,b){var c=a*40+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn831794(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn407485(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn380279(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn236247(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn580269(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn563990(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn261016(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn524094(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn918563(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn292124(a,b){var c=a*57+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn466385(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn128586(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn099013(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn659498(a,b){var c=a*41+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn631093(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn387675(a,b){var c=a*20+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn497781(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn184342(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn344435(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn590352(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn388984(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn309352(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn420857(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn847721(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn316511(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn347815(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn368449(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn540252(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn673114(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn606252(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn402171(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn581221(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn129600(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn357481(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn796443(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn435736(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn931851(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn707700(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn323403(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn579472(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn228352(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn633350(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn491527(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn166350(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn038362(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn011886(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn988331(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn468873(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn339988(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn912998(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn908014(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn711379(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn660269(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn168177(a,b){var c=a*64+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn260536(a,b){var c=a*32+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn120735(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn053200(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn039296(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn010426(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn991019(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn169689(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn752553(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn842549(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn823113(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn605408(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn554089(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn571065(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn588348(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn895450(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn064950(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn219847(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn623857(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn306947(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn848382(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn683318(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn749944(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn286067(a,b){var c=a*40+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn289560(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn002391(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn203060(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn462763(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn470721(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn907235(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn557393(a,b){var c=a*91+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn861302(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn132796(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn670024(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn761089(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn000077(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn980129(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn782800(a,b){var c=a*66+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn280192(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn375155(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn301156(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn527010(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn168784(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn666300(a,b){var c=a*3+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn795511(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn897030(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn460112(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn036781(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn327219(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn588724(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn171944(a,b){var c=a*40+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn902029(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn711087(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn210161(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn311838(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn299861(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn954439(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn197262(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn074687(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn327314(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn150652(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn737387(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn162611(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn708200(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn432773(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn960071(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn531243(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn838555(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn425910(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn799200(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn865296(a,b){var c=a*50+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn289706(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn715164(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn004479(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn787265(a,b){var c=a*64+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn230115(a,b){var c=a*7+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn637624(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn083416(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn551278(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn908191(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn273808(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn376581(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn868553(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn730368(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn245919(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn679441(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn639594(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn327335(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn400153(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn822067(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn480782(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn326728(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn718741(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn660669(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn666227(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn857021(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn684864(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn646927(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn201659(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn337486(a,b){var c=a*82+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn671229(a,b){var c=a*88+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn767384(a,b){var c=a*58+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn912617(a,b){var c=a*92+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn348726(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn848815(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn380538(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn569311(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn703262(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn854862(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn774721(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn213923(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn524977(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn335800(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn875691(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn976655(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn919841(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn212646(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn449463(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn814535(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn063281(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn093843(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn139283(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn651089(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn386291(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn005334(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn162219(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn265357(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn006397(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn640904(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn092694(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn417924(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn344795(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn858529(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn406072(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn278610(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn339771(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn639519(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn452661(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn069623(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn244714(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn100613(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn469593(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn152420(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn584335(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn774581(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn117390(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn255598(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn868203(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn978160(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn814612(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn107715(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn561644(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn026295(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn576642(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn975054(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn092058(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn782999(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn015493(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn365793(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn757761(a,b){var c=a*56+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn213325(a,b){var c=a*10+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn202854(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn518909(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn083802(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn533314(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn246025(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn782951(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn938672(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn672354(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn452822(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn128523(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn222553(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn583696(a,b){var c=a*18+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn640141(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn063926(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn706249(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn974941(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn297278(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn340382(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn244424(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn602036(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn431062(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn212527(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn074916(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn096554(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn180509(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn205427(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn029370(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn618142(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn148283(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn430458(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn888807(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn234265(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn799734(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn497403(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn187497(a,b){var c=a*68+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn615196(a,b){var c=a*93+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn475241(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn517271(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn475698(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn496255(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn336400(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn154012(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn015662(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn701212(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn738589(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn523529(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn991102(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn114747(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn768313(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn689961(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn203178(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn900763(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn245769(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn276323(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn441260(a,b){var c=a*22+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn401134(a,b){var c=a*95+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn305452(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn013056(a,b){var c=a*58+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn958531(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn807224(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn285891(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn608337(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn412040(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn597019(a,b){var c=a*94+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn541439(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn842392(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn255726(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn328627(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn045066(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn163189(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn899370(a,b){var c=a*59+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn708919(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn205034(a,b){var c=a*88+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn960901(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn972152(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn971126(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn273783(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn554644(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn151930(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn009392(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn972229(a,b){var c=a*95+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn971466(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn071418(a,b){var c=a*27+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn525784(a,b){var c=a*57+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn832961(a,b){var c=a*46+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn255625(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn805318(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn748132(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn617426(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn845206(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn305800(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn073056(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn701694(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn134023(a,b){var c=a*47+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn754696(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn914375(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn734689(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn645056(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn214668(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn219777(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn970918(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn119548(a,b){var c=a*50+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn004954(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn941759(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn507694(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn521017(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn408870(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn596238(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn535577(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn688755(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn719512(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn972795(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn788170(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn986100(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn269266(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn048854(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn324976(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn530573(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn129928(a,b){var c=a*16+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn113123(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn199854(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn326402(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn947840(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn928823(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn270934(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn733553(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn619842(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn086740(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn094924(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn567427(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn993077(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn078326(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn617596(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn999646(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn941888(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn611403(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn297706(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn281074(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn214327(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn495451(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn071425(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn592150(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn792446(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn371258(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn648866(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn877290(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn110501(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn846507(a,b){var c=a*15+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn294712(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn514628(a,b){var c=a*65+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn268488(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn855223(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn188934(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn482788(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn229922(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn726295(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn716061(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn523295(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn251063(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn164106(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn729259(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn498784(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn547398(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn884986(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn003802(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn102957(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn072768(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn838072(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn090568(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn270040(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn464762(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn226491(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn801818(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn730534(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn410546(a,b){var c=a*29+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn559119(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn788776(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn392111(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn682116(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn281665(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn424505(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn399827(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn977900(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn381345(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn259685(a,b){var c=a*26+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn865556(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn034599(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn573090(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn285402(a,b){var c=a*20+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn110630(a,b){var c=a*8+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn962190(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn301420(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn265782(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn090797(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn956253(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn569544(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn953186(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn359911(a,b){var c=a*85+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn164468(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn402713(a,b){var c=a*19+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn462242(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn618350(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn911375(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn195183(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn719959(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn115608(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn385380(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn244464(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn049099(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn297752(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn049642(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn436914(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn837817(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn975868(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn934688(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn901404(a,b){var c=a*73+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn192680(a,b){var c=a*46+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn563745(a,b){var c=a*12+b;for(var i=0;i<31;i+