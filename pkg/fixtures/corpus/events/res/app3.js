function fn473996(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn373198(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn692075(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn992124(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn517598(a,b){var c=a*54+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn677507(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn505983(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn444534(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn706834(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn558460(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn767860(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn631643(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn350762(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn428625(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn409632(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn695563(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn719343(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn704484(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn979710(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn283645(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn385863(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn764045(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn175771(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn354183(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn736643(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn348306(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn147571(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn983976(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn340224(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn053179(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn172904(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn155867(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn403248(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn083125(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn238658(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn148523(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn593299(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn652923(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn219609(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn432595(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn398142(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn479655(a,b){var c=a*4+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn547668(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn057485(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn717127(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn085614(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn252659(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn640691(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn025475(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn655530(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn785651(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn747999(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn446710(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn656050(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn373097(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn192546(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn281939(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn743799(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn199499(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn228764(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn458220(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn572862(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn768143(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn357744(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn568957(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn490460(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn024514(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn783520(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn291538(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn438667(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn234994(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn654857(a,b){var c=a*51+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn603339(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn968873(a,b){var c=a*24+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn939009(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn408748(a,b){var c=a*95+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn446955(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn531109(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn401328(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn206961(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn066508(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn696810(a,b){var c=a*13+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn221918(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn888882(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn486301(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn104721(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn958936(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn669333(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn875569(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn826982(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn937904(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn013702(a,b){var c=a*67+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn326142(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn607996(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn449750(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn343434(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn140844(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn833274(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn475844(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn925910(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn514790(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn065486(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn953235(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn679457(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn913040(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn172705(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn848078(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn478274(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn307378(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn532126(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn781598(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn082081(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn511786(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn932381(a,b){var c=a*96+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn979531(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn167812(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn946761(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn379768(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn771725(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn423792(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn194167(a,b){var c=a*87+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn687307(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn824053(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn027134(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn200579(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn962010(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn834517(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn749188(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn347727(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn979481(a,b){var c=a*11+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn160335(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn235371(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn882488(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn880899(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn382471(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn172393(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn336468(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn646720(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn280686(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn901892(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn489252(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn852192(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn732138(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn096047(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn794854(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn875204(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn116926(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn401523(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn148919(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn217965(a,b){var c=a*27+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn095462(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn054620(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn927166(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn734159(a,b){var c=a*57+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn674454(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn405416(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn065836(a,b){var c=a*41+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn780325(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn204342(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn155553(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn915712(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn293774(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn565326(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn667948(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn920869(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn990562(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn484085(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn378667(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn804080(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn232730(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn649714(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn989743(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn115917(a,b){var c=a*95+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn963081(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn797773(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn176711(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn269789(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn750925(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn608861(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn287148(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn271278(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn856836(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn247822(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn854796(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn412247(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn681735(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn270225(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn024765(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn162157(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn089795(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn014375(a,b){var c=a*76+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn904936(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn028491(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn044730(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn083839(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn567424(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn446133(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn294108(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn978394(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn653890(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn528159(a,b){var c=a*19+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn677820(a,b){var c=a*13+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn230506(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn965463(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn123280(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn320878(a,b){var c=a*91+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn819528(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn259795(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn360174(a,b){var c=a*35+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn562884(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn726519(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn825141(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn447636(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn037101(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn771567(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn924807(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn468326(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn502737(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn267084(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn773319(a,b){var c=a*33+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn990383(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn396804(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn735637(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn129117(a,b){var c=a*72+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn831239(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn067668(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn158172(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn846811(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn260005(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn039989(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn767584(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn892062(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn441891(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn871897(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn858086(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn655456(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn030964(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn585194(a,b){var c=a*84+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn655159(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn658598(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn331160(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn125175(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn363875(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn573657(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn536783(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn277596(a,b){var c=a*66+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn602373(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn118629(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn139150(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn766670(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn444243(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn396972(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn159461(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn530607(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn946659(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn848083(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn821233(a,b){var c=a*41+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn631783(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn561532(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn702082(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn265713(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn944264(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn351427(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn661787(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn384454(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn676745(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn471710(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn353815(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn290975(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn522675(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn767993(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn810076(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn416713(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn765282(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn165252(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn424983(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn051478(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn801366(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn902068(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn845615(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn126105(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn869555(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn322866(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn187641(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn605107(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn694987(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn988554(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn916683(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn148978(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn466239(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn940204(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn736327(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn539513(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn383006(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn239349(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn106427(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn466765(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn814695(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn401174(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn067429(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn375007(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn770623(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn340485(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn641443(a,b){var c=a*53+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn216337(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn179178(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn231531(a,b){var c=a*89+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn958206(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn502402(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn487716(a,b){var c=a*21+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn427864(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn417785(a,b){var c=a*73+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn588709(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn779451(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn786667(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn046521(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn880699(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn423217(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn555147(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn083111(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn654552(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn139419(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn019865(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn577466(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn249250(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn447764(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn435256(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn390346(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn374667(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn349725(a,b){var c=a*46+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn233834(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn171741(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn499954(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn066903(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn188775(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn495269(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn215798(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn308906(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn242567(a,b){var c=a*50+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn891238(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn487170(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn585339(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn030006(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn223926(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn428658(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn509659(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn176285(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn936637(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn281944(a,b){var c=a*9+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn656303(a,b){var c=a*89+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn801840(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn025844(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn905353(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn284489(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn308680(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn981816(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn905194(a,b){var c=a*31+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn409651(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn077332(a,b){var c=a*53+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn666917(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn342377(a,b){var c=a*51+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn433642(a,b){var c=a*25+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn794155(a,b){var c=a*7+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn196338(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn733006(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn294012(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn571008(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn513491(a,b){var c=a*13+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn946673(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn057678(a,b){var c=a*72+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn530843(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn333303(a,b){var c=a*33+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn584386(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn205661(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn090235(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn325282(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn058596(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn335749(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn788332(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn282085(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn571309(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn848718(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn461888(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn986682(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn958413(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn697613(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn476439(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn968360(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn270963(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn708636(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn742623(a,b){var c=a*18+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn826762(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn863095(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn171222(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn942629(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn164480(a,b){var c=a*54+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn145942(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn736111(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn263680(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i