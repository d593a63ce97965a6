function fn825266(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn201858(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn811288(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn438734(a,b){var c=a*69+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn383566(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn133106(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn427734(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn169126(a,b){var c=a*40+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn890676(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn785698(a,b){var c=a*29+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn140949(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn922454(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn256829(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn113721(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn633419(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn150272(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn947034(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn265305(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn680167(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn038151(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn997110(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn758405(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn725070(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn216015(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn935125(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn736129(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn416796(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn783039(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn572001(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn323898(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn130941(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn914123(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn617403(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn273974(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn985200(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn688825(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn398344(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn511376(a,b){var c=a*11+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn395338(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn927481(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn119340(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn644241(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn054611(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn125342(a,b){var c=a*87+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn238673(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn221622(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn300136(a,b){var c=a*83+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn535763(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn135878(a,b){var c=a*17+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn110819(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn076554(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn791639(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn651929(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn065999(a,b){var c=a*77+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn910399(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn376678(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn404626(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn398641(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn684662(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn033712(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn595872(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn385966(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn454873(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn551863(a,b){var c=a*27+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn417380(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn115336(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn888167(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn219722(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn260970(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn121807(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn609351(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn451361(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn235148(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn547211(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn427944(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn052044(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn742490(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn893219(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn803274(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn208264(a,b){var c=a*16+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn214033(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn528986(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn460173(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn759995(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn214796(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn427982(a,b){var c=a*79+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn316559(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn478034(a,b){var c=a*41+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn866182(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn671469(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn467619(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn106072(a,b){var c=a*56+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn845030(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn327793(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn905926(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn949701(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn682523(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn022971(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn514339(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn879840(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn213265(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn638040(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn862738(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn320948(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn629539(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn356172(a,b){var c=a*9+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn764777(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn974816(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn125689(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn409672(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn973474(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn174456(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn142151(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn337224(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn072850(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn378450(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn178844(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn703492(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn034968(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn677568(a,b){var c=a*88+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn595562(a,b){var c=a*28+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn378187(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn113520(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn410638(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn635803(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn675173(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn449279(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn457827(a,b){var c=a*40+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn224468(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn715948(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn798671(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn631772(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn236476(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn841278(a,b){var c=a*23+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn023184(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn139629(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn568165(a,b){var c=a*20+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn399444(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn600567(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn019008(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn104853(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn993021(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn694611(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn786474(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn532442(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn835358(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn680781(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn220939(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn027165(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn117975(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn700830(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn964337(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn312375(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn210674(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn269897(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn183534(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn942303(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn319420(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn127597(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn868738(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn065935(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn977983(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn975783(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn132934(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn266937(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn041049(a,b){var c=a*74+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn894105(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn857139(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn995824(a,b){var c=a*25+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn364320(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn068859(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn004285(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn450912(a,b){var c=a*14+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn456481(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn257444(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn397911(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn597805(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn377250(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn712423(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn804578(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn093519(a,b){var c=a*69+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn517735(a,b){var c=a*21+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn938132(a,b){var c=a*93+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn068437(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn722302(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn760715(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn576068(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn843392(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn328640(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn079797(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn568001(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn856051(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn552106(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn838717(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn397325(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn629337(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn556113(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn954400(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn556710(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn400805(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn099039(a,b){var c=a*95+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn293007(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn544992(a,b){var c=a*33+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn184158(a,b){var c=a*28+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn652686(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn778725(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn937276(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn273653(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn467743(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn888049(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn359939(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn738372(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn693966(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn602778(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn492986(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn128095(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn163426(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn442485(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn690800(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn677472(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn881592(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn081552(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn168297(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn079267(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn133298(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn362575(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn034057(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn170850(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn070690(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn297348(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn748643(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn256024(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn264131(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn279870(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn863088(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn921885(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn610290(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn120087(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn764499(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
func