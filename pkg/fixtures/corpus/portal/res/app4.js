function fn650852(a,b){var c=a*69+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn936516(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn607359(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn990073(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn462937(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn241862(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn391295(a,b){var c=a*16+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn296691(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn938071(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn597232(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn581202(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn733108(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn220789(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn740226(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn709383(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn776689(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn106977(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn148268(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn173683(a,b){var c=a*94+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn579596(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn657107(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn367852(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn148996(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn613527(a,b){var c=a*35+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn978063(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn505794(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn151950(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn483124(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn143894(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn751574(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn580452(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn363258(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn691935(a,b){var c=a*20+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn184407(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn136058(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn021194(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn933593(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn553494(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn029712(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn278853(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn615025(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn306506(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn492535(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn799762(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn122471(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn644254(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn301055(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn070074(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn641771(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn537264(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn329187(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn151309(a,b){var c=a*91+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn517053(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn150387(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn910054(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn757693(a,b){var c=a*25+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn807212(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn911813(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn680257(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn680567(a,b){var c=a*41+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn543972(a,b){var c=a*41+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn035131(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn168336(a,b){var c=a*72+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn816866(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn807625(a,b){var c=a*50+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn287362(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn554087(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn526997(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn966507(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn070321(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn959532(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn804315(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn313936(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn954669(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn647894(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn305469(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn368001(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn681541(a,b){var c=a*32+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn981458(a,b){var c=a*32+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn239876(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn568532(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn357926(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn524842(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn616867(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn906628(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn830637(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn916118(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn042097(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn978054(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn316751(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn371623(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn197569(a,b){var c=a*42+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn665300(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn996852(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn483098(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn434309(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn169354(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn104277(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn978808(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn598143(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn260468(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn005570(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn508490(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn992772(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn015813(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn588340(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn486869(a,b){var c=a*96+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn393700(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn113244(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn008443(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn734106(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn115287(a,b){var c=a*46+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn935675(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn620829(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn779401(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn837215(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn760188(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn305675(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn209558(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn557677(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn280556(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn088569(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn656814(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn531367(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn523679(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn997863(a,b){var c=a*46+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn544640(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn985812(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn862556(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn898783(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn613498(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn503845(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn126930(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn218280(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn396677(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn824912(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn705520(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn221773(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn786323(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn135556(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn250357(a,b){var c=a*7+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn102895(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn771968(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn651221(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn373797(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn993472(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn629330(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn416843(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn356577(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn211527(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn432475(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn465077(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn603639(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn895357(a,b){var c=a*51+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn536116(a,b){var c=a*92+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn850362(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn873064(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn025205(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn903546(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn458287(a,b){var c=a*90+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn064785(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn189443(a,b){var c=a*84+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn213023(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn450179(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn907725(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn361774(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn858927(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn911847(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn063265(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn047281(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn539456(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn739731(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn605572(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn851367(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn092156(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn028357(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn225483(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn734000(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn156840(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn627090(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn014964(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn138972(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn689805(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn242777(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn444157(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn652428(a,b){var c=a*21+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn151096(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn515838(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn298401(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn281424(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn634782(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn365383(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn662736(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn385504(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn696130(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn461012(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn390244(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn587944(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn722587(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn315233(a,b){var c=a*54+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn837788(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn600556(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn012953(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn464998(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn321616(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn877302(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn162512(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn348623(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn989608(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn854634(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn331753(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn252605(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn357350(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn485813(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn682052(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn757911(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn656608(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn541218(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn358974(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn058762(a,b){var c=a*97+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn424108(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn024447(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn983787(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn848561(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn458264(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn218472(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn010090(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn477923(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn886028(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn507054(a,b){var c=a*74+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn364940(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn738755(a,b){var c=a*78+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn512128(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn466321(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn437886(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn737720(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn063654(a,b){var c=a*62+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn012495(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn182373(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn002915(a,b){var c=a*56+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn440683(a,b){var c=a*50+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn399606(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn593628(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn355631(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn634150(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn146947(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn732908(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn291840(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn792869(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn821823(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn715465(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn790519(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn464719(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn990791(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn236191(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn160115(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn213749(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn167008(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn915073(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn574839(a,b){var c=a*45+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn157175(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn021761(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn016168(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn879227(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn074719(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn719845(a,b){var c=a*96+b;for(var i=0;i<26;i++