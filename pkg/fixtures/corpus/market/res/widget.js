function fn554646(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn754513(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn072901(a,b){var c=a*2+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn041677(a,b){var c=a*15+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn541727(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn290457(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn873770(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn621187(a,b){var c=a*94+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn416324(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn762975(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn452957(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn966147(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn170909(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn390699(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn666849(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn740498(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn766373(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn618797(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn682962(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn250473(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn752049(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn417087(a,b){var c=a*67+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn564575(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn796198(a,b){var c=a*86+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn865687(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn727109(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn382107(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn086565(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn940280(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn228975(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn773167(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn169172(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn423619(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn274315(a,b){var c=a*97+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn943486(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn177842(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn748461(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn856092(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn190174(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn402565(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn769617(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn296624(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn606359(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn259301(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn587589(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn591356(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn688798(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn069355(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn215724(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn868108(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn584264(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn676902(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn207831(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn566436(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn371008(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn995835(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn734342(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn169752(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn139253(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn376978(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn665353(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn820815(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn188247(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn099272(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn795515(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn633435(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn825757(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn562097(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn459338(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn859532(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn304243(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn251491(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn977260(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn411558(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn641691(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn912188(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn978606(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn688699(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn061343(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn074952(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn503725(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn304495(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn601825(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn394484(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn932260(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn842663(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn217802(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn304914(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn756562(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn704646(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn461250(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn011316(a,b){var c=a*69+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn854710(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn543354(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn658062(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn678948(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn712722(a,b){var c=a*57+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn239455(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn171933(a,b){var c=a*77+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn284209(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn654300(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn007793(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn039830(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn438819(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn018386(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn530105(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn896346(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn851032(a,b){var c=a*42+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn087974(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn978036(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn209367(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn885353(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn355742(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn598978(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn528143(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn448498(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn934678(a,b){var c=a*55+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn756444(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn812826(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn846778(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn918809(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn408534(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn721078(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn373789(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn513839(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn193490(a,b){var c=a*53+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn875125(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn032697(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn278036(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn823148(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn859792(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn529948(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn729257(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn902797(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn618294(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn232706(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn033454(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn642091(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn969989(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn928019(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn897674(a,b){var c=a*40+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn729942(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn302488(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn572075(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn502124(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn997165(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn899493(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn546679(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn066200(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn115686(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn870023(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn082861(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn316046(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn195918(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn391600(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn305856(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn082396(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn586848(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn736178(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn055358(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn778314(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn269665(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn666239(a,b){var c=a*35+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn878622(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn556724(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn709693(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn525363(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn506890(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn139612(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn140212(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn160880(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn696652(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn943031(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn759432(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn434040(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn151237(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn629766(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn529728(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn183721(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn762736(a,b){var c=a*37+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn260517(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn364074(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn631279(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn336767(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn404386(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn162553(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn108301(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn956289(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn826099(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn753611(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn032558(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn412481(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn728169(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn077187(a,b){var c=a*18+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn278011(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn058789(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn775364(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn280612(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn064065(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn267924(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn081038(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn228986(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn205427(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn343704(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn982905(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn526625(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn380504(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn559778(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn875707(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn095267(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn390270(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn252464(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn543527(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn535587(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn681380(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn618347(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn230604(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn566624(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn587685(a,b){var c=a*18+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn420831(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn501365(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn697621(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn311603(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn674743(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn275529(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn174659(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn345295(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn039115(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn086337(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn960778(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn890608(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn789199(a,b){var c=a*91+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn164220(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn603711(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn437027(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn015073(a,b){var c=a*32+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn434109(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn949823(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn762164(a,b){var c=a*64+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn000660(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn494499(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn876339(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn087609(a,b){var c=a*27+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn093252(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn638156(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn939745(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn072473(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn464399(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn974788(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn879652(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn194156(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn135558(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn325769(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn597725(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn902897(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn904702(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn457781(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn893259(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn123879(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn253697(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn334698(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn607598(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn773851(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn917368(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn914645(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn459489(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn944288(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn085306(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn473558(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn895404(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn468190(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn280179(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn605087(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn355076(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn463275(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn360931(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn201911(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn753623(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn543683(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn732925(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn726133(a,b){var c=a*75+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn556111(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn177069(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn798167(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn925887(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn398237(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn496278(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn206021(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn117866(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn784656(a,b){var c=a*32+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn121881(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn476547(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn525362(a,b){var c=a*9+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn383964(a,b){var c=a*30+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn760420(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn618104(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn545466(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn326082(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn991037(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn004796(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn219553(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn250038(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn543925(a,b){var c=a*50+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn176845(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn686383(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn986716(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn617359(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn136994(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn343859(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn997159(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn687231(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn050087(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn519796(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn068095(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn931987(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn424160(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn769836(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn972542(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn859969(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn721546(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn444432(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn094112(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn189855(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn290771(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn248383(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn642725(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn948349(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn364094(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn698789(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn345376(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn386791(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn530562(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn973314(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn742409(a,b){var c=a*30+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn025201(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn836759(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn176238(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn457077(a,b){var c=a*55+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn512016(a,b){var c=a*79+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn073743(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn584350(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn366891(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn603646(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn439363(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn035795(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn106835(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn628260(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn052639(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn186920(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn070962(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn054319(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn791272(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn256185(a,b){var c=a*23+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn486409(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn574620(a,b){var c=a*10+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn881078(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn200741(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn200340(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn165637(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn587857(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn683562(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn022635(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn911156(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn397270(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn754800(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn403537(a,b){var c=a*51+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn403162(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn784857(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn313722(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn402114(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn335745(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn153480(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn549661(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn551634(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn585499(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn167818(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn590888(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn354994(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn575121(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn780025(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn662573(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn691842(a,b){var c=a*3+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn855873(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn128114(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn140970(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn158001(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn579562(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn207083(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn893196(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn154337(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn198272(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn022287(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn464919(a,b){var c=a*40+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn160727(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn902649(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn565659(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn701452(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn630428(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn846291(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn679150(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn060813(a,b){var c=a*14+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn611182(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn503612(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn832145(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn634821(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn010310(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn270350(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn012780(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn379699(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn233353(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn199116(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn543468(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn541432(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn836154(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn512150(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn794796(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn749167(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn864561(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn719884(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn088325(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn126327(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn861642(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn933220(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn330299(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn831034(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn994158(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn695478(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn875031(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn922971(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn098651(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn617675(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn629668(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn403876(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn929425(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn864498(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn882073(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn949163(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn749718(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn618145(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn125811(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn694909(a,b){var c=a*62+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn856985(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn970548(a,b){var c=a*32+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn242274(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn532398(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn254140(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn960394(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn859497(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn809792(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn093402(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn994338(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn384473(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn563868(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn401447(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn748980(a,b){var c=a*16+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn979401(a,b){var c=a*63+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn117631(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn077481(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn657619(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn858959(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn957348(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn291195(a,b){var c=a*81+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn469575(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn118183(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn120320(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn793310(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn676148(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn001022(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn632493(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn286993(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn495528(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn792478(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn728586(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn309204(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn864634(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn265442(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn639825(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn045858(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn925398(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn686854(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn336944(a,b){var c=a*96+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn651888(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn129171(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn828897(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn768449(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn350542(a,b){var c=a*42+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn136119(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn371402(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn108779(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn492745(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn595227(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn218386(a,b){var c=a*30+b;for