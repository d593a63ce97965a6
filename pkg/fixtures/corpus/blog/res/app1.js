function fn067006(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn428893(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn032228(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn762824(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn943053(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn882380(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn655251(a,b){var c=a*79+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn991441(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn991656(a,b){var c=a*20+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn021375(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn699121(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn633189(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn067976(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn453826(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn600382(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn281065(a,b){var c=a*68+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn557239(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn185934(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn933737(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn799980(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn974373(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn933838(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn911330(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn751292(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn300049(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn614498(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn712361(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn893703(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn060100(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn911330(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn500438(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn239124(a,b){var c=a*20+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn875816(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn560791(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn208429(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn285877(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn862029(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn908961(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn456671(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn464946(a,b){var c=a*93+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn101880(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn642071(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn722555(a,b){var c=a*53+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn528425(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn824912(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn909217(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn737451(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn857662(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn488165(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn992482(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn490132(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn248169(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn478743(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn974532(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn871050(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn407241(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn217419(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn641286(a,b){var c=a*59+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn963648(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn029387(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn285321(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn940270(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn378954(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn892130(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn950050(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn726331(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn530529(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn871760(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn977464(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn698625(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn301909(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn756717(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn073458(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn601127(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn171619(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn545995(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn593121(a,b){var c=a*78+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn298809(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn548500(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn991454(a,b){var c=a*65+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn339883(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn735336(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn424902(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn739809(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn596137(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn689593(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn322899(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn256971(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn262516(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn627222(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn187854(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn038608(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn721958(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn967213(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn047368(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn403766(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn072077(a,b){var c=a*20+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn627468(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn204850(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn471069(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn038251(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn428218(a,b){var c=a*44+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn349280(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn850308(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn704878(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn271046(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn485747(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn809595(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn006870(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn854348(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn699576(a,b){var c=a*27+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn258914(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn130659(a,b){var c=a*44+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn972876(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn200980(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn679375(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn649805(a,b){var c=a*57+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn468956(a,b){var c=a*89+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn439121(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn707611(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn479448(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn951156(a,b){var c=a*5+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn580325(a,b){var c=a*91+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn868214(a,b){var c=a*86+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn239844(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn329289(a,b){var c=a*65+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn385336(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn453599(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn458934(a,b){var c=a*22+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn482808(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn510473(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn379263(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn423280(a,b){var c=a*95+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn931805(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn045462(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn970176(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn750810(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn440361(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn419362(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn352067(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn179642(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn618036(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn123174(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn704055(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn444199(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn091735(a,b){var c=a*90+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn444151(a,b){var c=a*71+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn122922(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn107594(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn362325(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn420130(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn851773(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn888555(a,b){var c=a*27+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn285832(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn874267(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn619535(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn493667(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn483653(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn480384(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn995763(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn932229(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn001607(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn097829(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn186607(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn834363(a,b){var c=a*50+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn438691(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn794978(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn738773(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn695637(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn846405(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn433879(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn846446(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn384213(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn954094(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn645063(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn343695(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn097871(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn202038(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn390212(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn015439(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn265910(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn287968(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn584935(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn587783(a,b){var c=a*94+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn203340(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn865589(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn915348(a,b){var c=a*72+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn348696(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn077947(a,b){var c=a*66+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn989751(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn358601(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn044340(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn341610(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn881925(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn757712(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn886276(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn281654(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn378578(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn416238(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn926180(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn425605(a,b){var c=a*54+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn553465(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn907108(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn551461(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn905666(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn705341(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn060668(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn970146(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn853123(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn066964(a,b){var c=a*54+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn451823(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn732222(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn552234(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn963072(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn536139(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn621403(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn604523(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn439466(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn465531(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn532277(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn462429(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn431534(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn917649(a,b){var c=a*76+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn551735(a,b){var c=a*53+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn696413(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn375851(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn083818(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn629567(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn131386(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn214217(a,b){var c=a*57+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn571271(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn310576(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn276188(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn680480(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn788762(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn350472(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn615484(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn735698(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn173998(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn771111(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn777633(a,b){var c=a*79+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn760036(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn637536(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn674536(a,b){var c=a*82+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn518556(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn632715(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn396041(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn354986(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn133355(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn365534(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn938185(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn551638(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn374900(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn852863(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn931466(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn860583(a,b){var c=a*79+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn281573(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn214301(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn649765(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn134964(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn628455(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn255962(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn315027(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn641173(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn557530(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn693284(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn832628(a,b){var c=a*41+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn263145(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn560145(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn042303(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn413332(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn988874(a,b){var c=a*73+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn246716(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn347285(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn457986(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn651362(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn954244(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn800263(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn898408(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn993095(a,b){var c=a*19+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn832031(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn104367(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn682673(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn967120(a,b){var c=a*81+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn641691(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn812231(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn477760(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn518159(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn732609(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn590074(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn035097(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn653019(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn584757(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn204907(a,b){var c=a*47+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn538694(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn577106(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn989201(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn133485(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn605276(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn852416(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn901684(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn137857(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn960542(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn612437(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn574486(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn775022(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn873806(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn172543(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn372489(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn916465(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn042029(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn622944(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn559883(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn428162(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn529227(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn860193(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn271336(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn037325(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn382452(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn203662(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn328216(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn563487(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn720642(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn625312(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn233538(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn964614(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn466195(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn444029(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn198797(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn891094(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn109356(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn681080(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn006168(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn198442(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn196036(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn497815(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn854047(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn294336(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn647458(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn890894(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn217861(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn993445(a,b){var c=a*14+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn437742(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn881430(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn309331(a,b){var c=a*67+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn968308(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn949701(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn873058(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn847716(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn512355(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn408778(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn092597(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn889101(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn072127(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn951967(a,b){var c=a*51+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn382834(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn712675(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn825189(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn166049(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn372015(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn032596(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn733286(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn558454(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn910960(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn326011(a,b){var c=a*44+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn741768(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn633830(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn890876(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn409617(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn794018(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn104196(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn496354(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn106813(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn291370(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn150744(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn782181(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn055710(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn269126(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn190224(a,b){var c=a*46+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn423576(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn975426(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn563463(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn484242(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn753789(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn333857(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn809181(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn976997(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn094069(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn711717(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn782406(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn579042(a,b){var c=a*57+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn645306(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn541848(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn069373(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn146040(a,b){var c=a*71+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn512922(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn692965(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn076551(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn054855(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn964724(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn048174(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn487820(a,b){var c=a*11+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn098826(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn659641(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn039602(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn432355(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn554143(a,b){var c=a*53+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn244653(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn763714(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn562848(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn741274(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn455547(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn612579(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn226153(a,b){var c=a*86+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn847198(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn126143(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn923399(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn217429(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn035304(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn706473(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn976304(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn264023(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn536234(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn029572(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn172706(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn757508(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn272764(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn255501(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn502046(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn018461(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn222559(a,b){var c=a*56+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn246179(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn768827(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn557557(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn741028(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn639138(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn233983(a,b){var c=a*62+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn782834(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn062798(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn359749(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn071154(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn271700(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn588616(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn491597(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn871965(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn373562(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn728869(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn218638(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn272253(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn685629(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn376075(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn362441(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn560327(a,b){var c=a*7+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn392097(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn133372(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn210218(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn557878(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn050996(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn578081(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn574998(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn729562(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn262515(a,b){var c=a*60+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn646556(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn601150(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn692672(a,b){var c=a*16+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn191616(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn829483(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn309851(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn348543(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn844530(a,b){var c=a*71+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn778663(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn900032(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn745559(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn885560(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn192295(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn702628(a,b){var c=a*51+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn855932(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn725502(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn025567(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn480102(a,b){var c=a*4+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn598151(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn041671(a,b){var c=a*45+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn998348(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn926966(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn986579(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn223576(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn697521(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn127227(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn078163(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn543237(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn603147(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn231603(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn284662(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn560021(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn405036(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn190117(a,b){var c=a*49+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn173692(a,b){var c=a*51+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn518716(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn276956(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn718849(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn655135(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn480474(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn206544(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn972461(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn406932(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn701839(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn171643(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn611774(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn234983(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn754172(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn303904(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn416339(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn565240(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn056840(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn953014(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn099725(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn419693(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn763852(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn439655(a,b){var c=a*70+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn617708(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn115242(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn470969(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn864815(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn813883(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn749374(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn838651(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn383212(a,b){var c=a*55+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn873670(a,b){var c=a*47+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn350856(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn703747(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn720362(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn534856(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn357706(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn334536(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn584796(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn493905(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn425819(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn692149(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn127928(a,b){var c=a*71+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn196155(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn267858(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn741088(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn197552(a,b){var c=a*59+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn749922(a,b){var c=a*32+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn904184(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn390085(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn178488(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn722548(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn320043(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn399215(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn483654(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn318394(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn099302(a,b){var c=a*46+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn252719(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn707694(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn564062(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn805508(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn084957(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn515733(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn458627(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn609251(a,b){var c=a*32+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn448312(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn046950(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn079449(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn767904(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn202440(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn341347(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn134366(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn526012(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn457305(a,b){var c=a*69+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn955742(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn271391(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn294758(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn132572(a,b){var c=a*29+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn705152(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn061704(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn599283(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn966094(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn933903(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn606864(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn358308(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn910054(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn342027(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn344745(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn070255(a,b){var c=a*93+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn625823(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn097374(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn146914(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn061707(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn008426(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn524251(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn972890(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn717989(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn935536(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn910591(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn029770(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn683406(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn132916(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn181321(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn765636(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn560181(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn648023(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn122650(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn935207(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn234256(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn435411(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn845937(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn829712(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn094524(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn468188(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn050606(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn497452(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn431639(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn741812(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn407573(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn147274(a,b){var c=a*86+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn333555(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn517112(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn086580(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn795158(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn795368(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn354694(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn930113(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn761091(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn606325(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn677110(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn184025(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn175656(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn638208(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn349362(a,b){var c=a*78+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn780994(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn905110(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn743357(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn543570(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn989502(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn136005(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn403074(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn472349(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn707855(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn486658(a,b){var c=a*51+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn611039(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn958090(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn998826(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn208445(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn676230(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn275126(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn362867(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn663354(a,b){var c=a*2+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn983587(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn628035(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn540022(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn100889(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn600641(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn910019(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn214629(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn579955(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn522530(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn591646(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn280011(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn517020(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn497410(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn669178(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn068757(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn895242(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn778728(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn288378(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn933417(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn702654(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn177443(a,b){var c=a*71+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn467783(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn861845(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn577869(a,b){var c=a*30+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn312348(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn916572(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn098431(a,b){var c=a*71+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn726992(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn564785(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn417791(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn353957(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn827727(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn909817(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn669945(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn605335(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn988485(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn740787(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn397076(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn330926(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn476032(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn349347(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn536995(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn427460(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn764528(a,b){var c=a*60+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn694246(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn724673(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn549176(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn306837(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn728195(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn915697(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn019050(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn320074(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn750630(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn236987(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn501822(a,b){var c=a*31+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn362898(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn767459(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn367733(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn217287(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn378424(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn855449(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn037495(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn157804(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn361089(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn050639(a,b){var c=a*71+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn773852(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn117822(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn189710(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn961973(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn198662(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn341967(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn642078(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn967635(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn016956(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn202028(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn011394(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn926629(a,b){var c=a*58+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn790049(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn701548(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn264984(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn050837(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn458874(a,b){var c=a*78+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn595421(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn275942(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn422264(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn539429(a,b){var c=a*10+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn391475(a,b){var c=a*61+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn219271(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn758625(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn661366(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn335159(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn086115(a,b){var c=a*79+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn628806(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn585950(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn094465(a,b){var c=a*90+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn051020(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn047867(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn748240(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn336897(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn723103(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn606192(a,b){var c=a*80+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn071300(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn168832(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn063180(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn088329(a,b){var c=a*19+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn042557(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn166356(a,b){var c=a*92+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn394259(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn523442(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn278045(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn016641(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn713229(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn694473(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn487617(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn281496(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn900568(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn421650(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn985091(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn338647(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn437104(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn169684(a,b){var c=a*16+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn232552(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn847037(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn077488(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn653587(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn927046(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn417171(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn320947(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn041599(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn178688(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn684802(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn207642(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn316287(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn960266(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn715560(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn499602(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn772319(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn072912(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn116773(a,b){var c=a*80+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn301091(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn521941(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn036220(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn174531(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn599803(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn509872(a,b){var c=a*92+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn855805(a,b){var c=a*14+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn015416(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn304257(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn013891(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn306392