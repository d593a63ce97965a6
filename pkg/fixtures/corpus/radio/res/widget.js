function fn143189(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn570990(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn933682(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn382489(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn764500(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn415506(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn983259(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn842423(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn114611(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn732109(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn803151(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn805340(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn533131(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn423991(a,b){var c=a*22+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn262445(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn736694(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn378279(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn438016(a,b){var c=a*34+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn904196(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn061563(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn065051(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn373797(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn564574(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn488202(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn427246(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn637315(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn787832(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn312851(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn906925(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn793461(a,b){var c=a*14+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn010311(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn209500(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn859291(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn468173(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn388568(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn240055(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn679070(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn248061(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn771843(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn346814(a,b){var c=a*50+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn928385(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn347175(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn940956(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn343628(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn593260(a,b){var c=a*53+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn994133(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn886354(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn385134(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn455604(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn825492(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn554539(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn298931(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn373272(a,b){var c=a*37+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn476626(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn130816(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn667169(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn508672(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn139746(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn771400(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn415596(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn610189(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn725718(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn418931(a,b){var c=a*3+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn690615(a,b){var c=a*41+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn695115(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn371100(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn865217(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn791473(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn583452(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn444894(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn087655(a,b){var c=a*46+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn952905(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn213170(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn777007(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn259809(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn414628(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn923263(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn691047(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn858267(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn556330(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn198885(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn370509(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn745880(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn052302(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn092135(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn473032(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn956886(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn459848(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn775309(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn459920(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn286271(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn150300(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn243025(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn118777(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn223141(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn921551(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn510743(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn683852(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn590156(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn974870(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn523553(a,b){var c=a*64+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn673479(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn749646(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn565149(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn943430(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn699345(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn287297(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn758353(a,b){var c=a*3+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn845919(a,b){var c=a*41+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn461043(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn178937(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn803234(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn913832(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn852011(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn634945(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn866474(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn401594(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn811394(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn730553(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn899252(a,b){var c=a*56+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn489897(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn142038(a,b){var c=a*15+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn492297(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn574673(a,b){var c=a*65+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn596889(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn029993(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn106216(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn193899(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn533549(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn594547(a,b){var c=a*13+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn374391(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn584994(a,b){var c=a*96+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn084185(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn796420(a,b){var c=a*14+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn976891(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn275003(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn988209(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn633292(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn215565(a,b){var c=a*81+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn441280(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn239167(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn670413(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn269950(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn436740(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn559321(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn357852(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn652496(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn461894(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn445303(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn315993(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn457892(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn537905(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn662728(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn169625(a,b){var c=a*13+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn405240(a,b){var c=a*76+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn406665(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn298516(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn545898(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn363200(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn142819(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn001289(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn559376(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn423180(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn980095(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn085200(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn127536(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn542552(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn756342(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn306554(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn703894(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn175064(a,b){var c=a*43+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn376632(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn752694(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn010360(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn599365(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn211233(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn082319(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn978614(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn216335(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn221318(a,b){var c=a*45+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn206609(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn296928(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn007698(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn178038(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn895062(a,b){var c=a*72+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn640736(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn311741(a,b){var c=a*86+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn843382(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn206019(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn115827(a,b){var c=a*41+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn344727(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn639418(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn470398(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn390250(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn243816(a,b){var c=a*78+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn081081(a,b){var c=a*72+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn674436(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn563010(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn134257(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn994179(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn787813(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn429307(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn975648(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn807599(a,b){var c=a*79+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn030562(a,b){var c=a*9+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn882079(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn610416(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn435868(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn109079(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn008800(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn715512(a,b){var c=a*62+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn886253(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn615516(a,b){var c=a*41+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn363683(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn751726(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn708817(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn905720(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn063855(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn738896(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn557872(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn545268(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn995060(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn298558(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn682929(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn485947(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn218169(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn058632(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn181005(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn158856(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn854331(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn270171(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn015088(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn052540(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn668407(a,b){var c=a*82+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn527443(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn381303(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn124795(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn955502(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn924907(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn755755(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn845921(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn023545(a,b){var c=a*37+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn113265(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn862596(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn791000(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn225314(a,b){var c=a*62+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn134699(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn131104(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn765907(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn969479(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn376289(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn558958(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn528353(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn407157(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn346848(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn956719(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn881651(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn204275(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn655784(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn757636(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn416775(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn680728(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn508931(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn109053(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn649968(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn940778(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn236464(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn486946(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn920429(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn226984(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn608089(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn334075(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn059878(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn882803(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn681999(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn753740(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn185848(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn296717(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn796376(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn653101(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn571724(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn456444(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn527958(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn307427(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn994932(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn838385(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn843165(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn744764(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn843601(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn330155(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn750912(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn557428(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn767297(a,b){var c=a*60+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn167896(a,b){var c=a*78+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn167504(a,b){var c=a*51+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn440241(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn864152(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn923541(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn005171(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn142749(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn114474(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn580710(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn358681(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn699872(a,b){var c=a*78+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn876703(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn219308(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn729012(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn300645(a,b){var c=a*38+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn967372(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn213479(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn982680(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn187567(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn924658(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn673269(a,b){var c=a*92+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn547778(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn269973(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn590999(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn992639(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn731145(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn329722(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn357154(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn245448(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn614681(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn477487(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn357120(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn733288(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn729494(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn915758(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn829176(a,b){var c=a*16+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn938248(a,b){var c=a*8+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn613790(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn881334(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn391172(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn565004(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn123845(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn513322(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn957423(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn783463(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn305148(a,b){var c=a*79+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn260832(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn002068(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn737124(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn665031(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn760717(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn298116(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn704445(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn418756(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn852811(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn287084(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn817304(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn232766(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn979441(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn973173(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn391520(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn876459(a,b){var c=a*58+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn016319(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn136982(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn809708(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn177021(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn101607(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn704249(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn463447(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn485740(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn733731(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn991054(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn295244(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn361874(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn717702(a,b){var c=a*89+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn340285(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn650497(a,b){var c=a*12+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn301902(a,b){var c=a*3+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn978163(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn652589(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn131448(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn263913(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn288227(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn676998(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn892189(a,b){var c=a*22+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn874939(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn522320(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn600776(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn197334(a,b){var c=a*30+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn402099(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn724724(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn607518(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn432802(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn959603(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn763111(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn127984(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn496383(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn059826(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn684307(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn741944(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn512031(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn453238(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn167036(a,b){var c=a*6+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn652769(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn055122(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn894143(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn957382(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn122996(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn047964(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn225516(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn639172(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn448952(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn584174(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn759651(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn998131(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn460932(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn018837(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn880301(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn691022(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn202168(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn278434(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn109793(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn133711(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn573963(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn607704(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn773254(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn086966(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn344457(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn841901(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn567204(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn020403(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn830945(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn998870(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn999309(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn456297(a,b){var c=a*78+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn927399(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn313780(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn346626(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn195680(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn828548(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn267019(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn356985(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn998395(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn868555(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn499683(a,b){var c=a*60+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn954904(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn393889(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn672127(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn342971(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn690391(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn709475(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn775842(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn277957(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn273461(a,b){var c=a*14+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn236718(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn686238(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn199974(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn392078(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn235606(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn505872(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn314894(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn474900(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn359567(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn372350(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn598932(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn123607(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn996071(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn737181(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn973363(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn163657(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn422503(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn601936(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn178549(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn110637(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn331222(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn952585(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn503944(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn429463(a,b){var c=a*66+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn321075(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn489056(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn496173(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn430828(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn362791(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn779840(a,b){var c=a*65+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn991144(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn059193(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn742170(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn007109(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn217206(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn671311(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn190207(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn751677(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn633713(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn665340(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn776751(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn743305(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn938330(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn503818(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn681499(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%2;}r