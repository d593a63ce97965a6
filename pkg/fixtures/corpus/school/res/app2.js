function fn113083(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn687363(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn071988(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn872741(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn667887(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn894569(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn740123(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn621422(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn185529(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn831730(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn364532(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn935926(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn423149(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn500165(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn008804(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn492734(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn229901(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn397424(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn583590(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn173543(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn321294(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn924347(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn804089(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn031725(a,b){var c=a*7+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn615428(a,b){var c=a*53+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn802220(a,b){var c=a*72+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn262689(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn097074(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn332974(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn303638(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn851285(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn351708(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn580711(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn833751(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn716938(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn748691(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn144902(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn433182(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn383871(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn157095(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn800649(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn929974(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn440356(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn258675(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn780764(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn365900(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn488424(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn172441(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn187791(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn023839(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn405162(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn902178(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn057341(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn353043(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn278893(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn233082(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn569284(a,b){var c=a*75+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn548571(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn041619(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn136044(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn112732(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn312098(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn116312(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn149482(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn084425(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn936891(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn120798(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn776470(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn535099(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn051973(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn566338(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn625721(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn356459(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn285489(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn385564(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn460417(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn500868(a,b){var c=a*29+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn428828(a,b){var c=a*50+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn791945(a,b){var c=a*88+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn791029(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn536134(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn848709(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn835950(a,b){var c=a*93+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn103846(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn016279(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn231040(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn757150(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn377744(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn542367(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn124908(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn395598(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn672885(a,b){var c=a*27+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn565390(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn632551(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn994864(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn768127(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn989288(a,b){var c=a*21+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn568710(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn849046(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn487160(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn536665(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn011478(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn409812(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn261861(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn877435(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn301535(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn897198(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn887193(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn530999(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn714917(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn053838(a,b){var c=a*16+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn217128(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn942128(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn697998(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn680112(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn288720(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn106648(a,b){var c=a*32+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn043059(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn683846(a,b){var c=a*6+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn310840(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn075770(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn737008(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn896679(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn209080(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn646504(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn230172(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn097951(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn329214(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn478898(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn952157(a,b){var c=a*12+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn827720(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn217553(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn979589(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn279482(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn191281(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn569717(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn021779(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn205636(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn912711(a,b){var c=a*73+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn847572(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn285192(a,b){var c=a*35+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn712500(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn564430(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn605084(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn840976(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn416940(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn170945(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn176302(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn498746(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn122619(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn245976(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn257674(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn557577(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn918979(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn181091(a,b){var c=a*91+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn695784(a,b){var c=a*30+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn075710(a,b){var c=a*55+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn186697(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn169648(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn590272(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn405619(a,b){var c=a*35+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn229036(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn339708(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn429023(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn228275(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn681120(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn348790(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn835470(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn830140(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn390220(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn879026(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn093271(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn594656(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn988428(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn216571(a,b){var c=a*11+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn562193(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn698328(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn611648(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn573162(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn243168(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn334288(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn302549(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn649744(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn053061(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn411729(a,b){var c=a*59+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn484927(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn778701(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn779216(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn778580(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn301506(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn981022(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn658607(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn234590(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn838759(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn653346(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn742823(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn006034(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn640395(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn230773(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn315217(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn896758(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn925747(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn474960(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn831165(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn843843(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn620536(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn114811(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn092399(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn822827(a,b){var c=a*38+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn644551(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn150554(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn422359(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn764658(a,b){var c=a*16+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn669580(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn530864(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn935828(a,b){var c=a*58+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn144494(a,b){var c=a*76+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn797376(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn380830(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn515939(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn333413(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn633538(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn307768(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn684241(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn793481(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn316747(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn766636(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn047477(a,b){var c=a*91+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn669504(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn907591(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn381008(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn247204(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn469017(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn251488(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn176822(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn881141(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn561231(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn754069(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn352879(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn568482(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn907755(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn306922(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn339050(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn215737(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn959063(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn036236(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn813169(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn038362(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn168705(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn594770(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn683791(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn611424(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn488213(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn180224(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn956298(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn056938(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn925136(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn972414(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn880289(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn797731(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn707624(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn997495(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn050143(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn451882(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn361621(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn419297(a,b){var c=a*48+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn459424(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn546027(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn020679(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn461079(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn265125(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn712547(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn752512(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn942019(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn346228(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn838984(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn169674(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn081575(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn376220(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn369010(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn093868(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn473928(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn865993(a,b){var c=a*82+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn347003(a,b){var c=a*61+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn865082(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn870758(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn948983(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn368666(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn911034(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn256337(a,b){var c=a*38+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn710685(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn594582(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn097038(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn623089(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn354759(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn307359(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn883338(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn553415(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn252602(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn668357(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn503509(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn982674(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn957637(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn431705(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn929980(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn945785(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn315092(a,b){var c=a*56+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn053453(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn404692(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn488608(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn179380(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn483487(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn637878(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn355627(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn113278(a,b){var c=a*90+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn468923(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn050753(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn258377(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn868134(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn756053(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn118648(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn296759(a,b){var c=a*53+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn054128(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn255904(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn846285(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn431809(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn495513(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn559836(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn445673(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn833912(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn217383(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn923174(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn108577(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn666881(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn534251(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn290750(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn751287(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn101976(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn076066(a,b){var c=a*55+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn975805(a,b){var c=a*66+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn930332(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn853932(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn677442(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn892772(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn925238(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn047960(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn933667(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn527658(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn155631(a,b){var c=a*54+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn629391(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn012626(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn884391(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn121990(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn262409(a,b){var c=a*72+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn581125(a,b){var c=a*53+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn033959(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn991576(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn235353(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn968049(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn269333(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn507423(a,b){var c=a*62+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn616700(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn253870(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn593028(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn977235(a,b){var c=a*53+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn592797(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn109629(a,b){var c=a*2+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn108785(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn471236(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn777607(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn823089(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn852179(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn194658(a,b){var c=a*78+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn051522(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn334137(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn249778(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn847329(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn764487(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn496415(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn582568(a,b){var c=a*29+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn028047(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn083674(a,b){var c=a*94+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn331430(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn449844(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn033969(a,b){var c=a*95+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn777485(a,b){var c=a*39+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn633436(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn236858(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn057968(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn470778(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn575327(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn615496(a,b){var c=a*43+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn243602(a,b){var c=a*33+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn601931(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn874160(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn496077(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn683042(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn972009(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn623805(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn957018(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn014298(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn663320(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn744318(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn547762(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn210289(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn091272(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn815124(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn338110(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn807157(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn443357(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn345721(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn578298(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn582881(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn266099(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn763811(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn383242(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn734045(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn824981(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn741538(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn093408(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn000560(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn433282(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn362916(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn628773(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn031731(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn516677(a,b){