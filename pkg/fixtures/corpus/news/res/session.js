function fn637966(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn956845(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn656846(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn000224(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn428761(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn763572(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn747226(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn100166(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn217548(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn541791(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn688569(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn814120(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn219335(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn099725(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn402666(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn849456(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn893201(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn277864(a,b){var c=a*43+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn127026(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn405451(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn807716(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn942379(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn433705(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn578100(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn605350(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn359173(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn355888(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn792375(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn462015(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn511776(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn609123(a,b){var c=a*44+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn010251(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn218441(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn382910(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn911712(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn838851(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn490301(a,b){var c=a*51+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn256649(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn105882(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn443318(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn179211(a,b){var c=a*97+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn812773(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn371839(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn742592(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn526197(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn497452(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn397706(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn343283(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn066043(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn441086(a,b){var c=a*93+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn841822(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn622255(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn510159(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn684314(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn570928(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn580340(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn341366(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn388000(a,b){var c=a*55+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn131707(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn185011(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn646672(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn439829(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn118983(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn333624(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn918594(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn089411(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn521911(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn736167(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn277014(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn978638(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn801696(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn518269(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn954773(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn680469(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn697457(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn142175(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn342901(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn293362(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn650669(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn986296(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn646381(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn489330(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn585585(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn187017(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn558700(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn041116(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn603168(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn145626(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn776650(a,b){var c=a*88+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn478517(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn686453(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn756779(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn098670(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn830099(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn806211(a,b){var c=a*65+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn774779(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn624193(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn957693(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn476589(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn162111(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn578071(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn161380(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn706909(a,b){var c=a*10+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn503038(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn836727(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn528426(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn184498(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn027471(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn867489(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn591186(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn356126(a,b){var c=a*63+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn690184(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn006557(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn866669(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn101541(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn757451(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn470512(a,b){var c=a*35+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn804331(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn198092(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn255508(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn127167(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn372507(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn600468(a,b){var c=a*40+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn463550(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn747250(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn084517(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn396652(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn750769(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn074527(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn212620(a,b){var c=a*29+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn904264(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn525437(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn056056(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn575248(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn113340(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn078536(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn000935(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn717791(a,b){var c=a*69+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn644656(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn384476(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn285264(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn441449(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn373810(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn244939(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn055906(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn811191(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn176452(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn280745(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn230223(a,b){var c=a*48+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn561300(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn065088(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn227495(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn018389(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn376110(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn009475(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn031553(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn039526(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn347555(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn937318(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn823318(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn998017(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn685558(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn301736(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn231435(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn255444(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn233089(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn229967(a,b){var c=a*25+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn964566(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn394851(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn443440(a,b){var c=a*25+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn579413(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn169531(a,b){var c=a*90+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn088020(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn458479(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn976683(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn891909(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn647415(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn478432(a,b){var c=a*72+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn182453(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn366426(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn198789(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn946364(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn340299(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn972896(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn325969(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn366877(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn164343(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn554591(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn320114(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn493915(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn130861(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn650425(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn957405(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn232836(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn506956(a,b){var c=a*29+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn276633(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn389862(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn582457(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn263187(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn793139(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn945862(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn429829(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn658749(a,b){var c=a*15+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn529554(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn875300(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn087600(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn394207(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn903777(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn397305(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn568937(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn112118(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn923420(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn798479(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn152233(a,b){var c=a*13+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn311053(a,b){var c=a*38+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn061692(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn718878(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn963891(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn729638(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn267435(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn069815(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn176603(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn838248(a,b){var c=a*57+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn867150(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn519135(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn226625(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn064445(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn505433(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn269755(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn067545(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn352444(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn672739(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn914132(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn608106(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn554905(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn829327(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn769016(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn119033(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn333651(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn643873(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn371096(a,b){var c=a*17+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn429587(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn991396(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn929419(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn888744(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn000874(a,b){var c=a*80+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn577273(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn227957(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn701573(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn717531(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn481186(a,b){var c=a*58+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn127495(a,b){var c=a*57+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn795141(a,b){var c=a*54+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn634467(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn940089(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn312971(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn986269(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn602412(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn277208(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn167698(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn794740(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn485884(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn357975(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn920174(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn361604(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn425954(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn289477(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn008963(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn675750(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn230103(a,b){var c=a*46+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn368290(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn448452(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn695077(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn068812(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn449761(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn400935(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn415005(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn610140(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn179930(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn965401(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn765078(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn050958(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn633343(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn063204(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn666438(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn927100(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn351618(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn154549(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn296138(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn014367(a,b){var c=a*52+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn555587(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn319404(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn798778(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn553736(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn299829(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn925783(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn389210(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn662793(a,b){var c=a*35+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn394713(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn788110(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn193951(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn853742(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn693023(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn528064(a,b){var c=a*86+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn914936(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn101158(a,b){var