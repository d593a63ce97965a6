function fn810283(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn206486(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn828260(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn809841(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn448186(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn379374(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn547128(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn425681(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn585852(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn954023(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn008630(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn065041(a,b){var c=a*40+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn080170(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn894343(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn585089(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn004073(a,b){var c=a*3+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn836930(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn794141(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn345457(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn276685(a,b){var c=a*86+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn640359(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn340676(a,b){var c=a*37+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn563104(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn539625(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn275585(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn657103(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn639251(a,b){var c=a*34+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn644128(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn016044(a,b){var c=a*71+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn024982(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn682461(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn763828(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn212966(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn935562(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn750063(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn492655(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn036974(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn900330(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn354937(a,b){var c=a*84+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn346335(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn664005(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn969209(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn011853(a,b){var c=a*11+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn191579(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn403375(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn430464(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn841857(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn048427(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn922965(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn797866(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn254835(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn595971(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn094172(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn869343(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn418199(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn104924(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn471027(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn889374(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn229052(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn706416(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn006987(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn632186(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn510855(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn862868(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn996425(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn444506(a,b){var c=a*30+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn422791(a,b){var c=a*46+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn666441(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn834317(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn826123(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn150997(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn052745(a,b){var c=a*4+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn943995(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn572474(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn648772(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn955609(a,b){var c=a*95+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn374409(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn787199(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn734303(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn963350(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn446516(a,b){var c=a*58+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn354722(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn600978(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn667430(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn128112(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn398057(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn650069(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn141337(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn987347(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn721657(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn274511(a,b){var c=a*69+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn291219(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn989747(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn281749(a,b){var c=a*31+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn595437(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn555705(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn395905(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn631664(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn764314(a,b){var c=a*45+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn484739(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn993444(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn453318(a,b){var c=a*51+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn338829(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn096408(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn880156(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn121495(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn501511(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn221091(a,b){var c=a*63+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn794869(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn890394(a,b){var c=a*32+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn780089(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn542969(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn774168(a,b){var c=a*78+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn672613(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn219474(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn766984(a,b){var c=a*31+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn150143(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn370608(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn187023(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn432376(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn591216(a,b){var c=a*93+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn027924(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn156600(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn393723(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn828731(a,b){var c=a*62+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn781283(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn871875(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn662595(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn560821(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn087518(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn883067(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn330393(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn333527(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn220905(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn965861(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn602472(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn483788(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn843439(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn379522(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn269365(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn276441(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn081800(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn840478(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn631288(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn431319(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn315603(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn120972(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn451204(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn643998(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn310116(a,b){var c=a*24+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn451161(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn703262(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn914499(a,b){var c=a*87+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn739214(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn080701(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn525685(a,b){var c=a*11+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn410988(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn533595(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn899637(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn619461(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn713608(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn147710(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn165239(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn389958(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn670747(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn927002(a,b){var c=a*49+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn693101(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn375140(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn320111(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn797569(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn807510(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn624368(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn244966(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn422397(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn662408(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn966665(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn327728(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn020572(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn425113(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn362158(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn261237(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn936491(a,b){var c=a*77+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn690995(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn421612(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn842667(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn580911(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn504880(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn272847(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn477908(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn722157(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn608690(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn901671(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn308156(a,b){var c=a*94+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn184636(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn581128(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn688130(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn144362(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn432840(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn185499(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn809499(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn398995(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn662526(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn157161(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn131421(a,b){var c=a*15+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn735722(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn804191(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn368212(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn838061(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn506766(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn831134(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn460747(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn099684(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn676046(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn066597(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn299106(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn199223(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn721366(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn488828(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn349762(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn477111(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn580562(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn529952(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn274153(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn888268(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn085721(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn234731(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn102041(a,b){var c=a*63+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn762027(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn684271(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn611439(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn469712(a,b){var c=a*25+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn667140(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn907416(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn383886(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn246329(a,b){var c=a*79+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn312931(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn536167(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn826873(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn508041(a,b){var c=a*73+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn211901(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn922021(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn865116(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn939971(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn849105(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn157876(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn947921(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn787420(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn762596(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn108853(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn902924(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn486192(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn941006(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn579759(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn483314(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn892337(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn113880(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn504264(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn285676(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn558152(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn418754(a,b){var c=a*41+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn021258(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn019176(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn869085(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn090192(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn359843(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn986639(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn795601(a,b){var c=a*29+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn284670(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn651562(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn144376(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn125196(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn497845(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn051304(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn486501(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn065732(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn794668(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn705978(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn783024(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn771609(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn557331(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn353504(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn836891(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn108801(a,b){var c=a*94+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn855656(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn347686(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn499620(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn621513(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn111749(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn683873(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn189439(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn894765(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn296030(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn346039(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn598113(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn811269(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn019518(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn394627(a,b){var c=a*41+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn522819(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn277334(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn651013(a,b){var c=a*49+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn438300(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn047573(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn009615(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn477885(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn320420(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn759572(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn635973(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn215573(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn024349(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn809230(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn688221(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn573999(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn717388(a,b){var c=a*82+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn291780(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn729273(a,b){var c=a*91+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn736929(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn972011(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn420952(a,b){var c=a*44+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn624982(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn534439(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn686549(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn795120(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn747232(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn694976(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn856156(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn203519(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn875326(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn654854(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn824832(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn357205(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn598027(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn608116(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn279258(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn124057(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn486648(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn670722(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn859735(a,b){var c=a*79+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn394562(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn714712(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn945045(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn626358(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn621481(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn995059(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn698278(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn272464(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn596142(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn316376(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn210666(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn757247(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn243496(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn972638(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn503869(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn139575(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn604575(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn237176(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn132402(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn057492(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn267398(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn075992(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn651269(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn809801(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn040983(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn603025(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn322993(a,b){var c=a*73+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn329573(a,b){var c=a*17+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn024229(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn684651(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn524831(a,b){var c=a*30+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn663051(a,b){var c=a*64+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn087192(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn592649(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn062168(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn712434(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn450445(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn653051(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn122036(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn833489(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn202673(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn894057(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn419527(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn302984(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn650822(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn236853(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn654025(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn546808(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn997192(a,b){var c=a*40+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn481758(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn980033(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn993153(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn723561(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn409421(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn923381(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn849070(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn100380(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn570704(a,b){var c=a*28+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn705983(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn902834(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn840196(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn666110(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn319694(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn835870(a,b){var c=a*52+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn650371(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn842239(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn520925(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn701546(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn133887(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn595220(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn219592(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn702425(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn577290(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn488107(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn964699(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn578793(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn723117(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn800844(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn819783(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn666297(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn887732(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn592679(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn496688(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn698456(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn599217(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn807747(a,b){var c=a*11+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn857930(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn034645(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn737821(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn486117(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn318952(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn999793(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn677749(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn798027(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn065140(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn343735(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn597794(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn910338(a,b){var c=a*52+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn397589(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn859266(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn433536(a,b){var c=a*75+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn492807(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn632410(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn267237(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn705669(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn983191(a,b){var c=a*8+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn793738(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn418701(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn313103(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn878845(a,b){var c=a*70+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn640352(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn582973(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn247200(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn739728(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn027628(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn137169(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn461833(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn200801(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn460225(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn019192(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn842348(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn187108(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn912276(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn495864(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn808216(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn852760(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn847926(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn015398(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn260275(a,b){var c=a*88+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn793337(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn824890(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn308331(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn138814(a,b){var c=a*61+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn338112(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn653385(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn116184(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn081410(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn027707(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn581311(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn814929(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn586824(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn574273(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn922559(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn401199(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn836537(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn066236(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn256744(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn592206(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn273588(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn657902(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn342310(a,b){var c=a*6+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn457571(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn801794(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn817726(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn843353(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn784756(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn550393(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn779797(a,b){var c=a*95+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn318013(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn383358(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn366813(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn673207(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn186526(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn379081(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn257072(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn693051(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn866455(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn804441(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn992278(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn468822(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn549811(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn100869(a,b){var c=a*51+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn606994(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn147201(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn909576(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn042080(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn338709(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn093093(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn334761(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn952929(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn157404(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn443664(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn011040(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn223043(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn533059(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn765432(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn897395(a,b){var c=a*69+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn077543(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn843608(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn993822(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn348415(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn914863(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn087153(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn408911(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn245111(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn799595(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn105285(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn882729(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn109397(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn662178(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn536951(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn211192(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn946744(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn178294(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn645595(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn214821(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn283527(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn575495(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn480641(a,b){var c=a*7+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn845975(a,b){var c=a*68+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn979710(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn825477(a,b){var c=a*86+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn714775(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn781412(a,b){var c=a*55+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn042690(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn069857(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn238195(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn796139(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn829850(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn090113(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn894051(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%11;}return c;}