function fn133190(a,b){var c=a*40+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn120157(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn669803(a,b){var c=a*21+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn390504(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn292330(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn793965(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn390733(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn326669(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn612629(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn951779(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn254257(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn412676(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn328628(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn363802(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn398862(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn821272(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn486422(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn446352(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn331896(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn240687(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn745044(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn646356(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn208121(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn757647(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn609534(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn105271(a,b){var c=a*46+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn267992(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn020876(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn181801(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn670017(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn915980(a,b){var c=a*88+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn662955(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn552833(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn854723(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn157867(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn986925(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn964467(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn709612(a,b){var c=a*58+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn790668(a,b){var c=a*17+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn384954(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn281637(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn964824(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn229357(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn932102(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn885523(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn457263(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn093696(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn511362(a,b){var c=a*65+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn676022(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn094384(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn115588(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn486786(a,b){var c=a*15+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn417264(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn122666(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn195194(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn608107(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn396500(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn808196(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn760207(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn260529(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn543690(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn736901(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn796641(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn835506(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn766038(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn646950(a,b){var c=a*32+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn488012(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn042290(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn364077(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn112384(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn317340(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn651818(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn365349(a,b){var c=a*31+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn922063(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn855052(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn815824(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn659631(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn976032(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn883835(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn565001(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn549561(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn990233(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn595389(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn502722(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn502386(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn093337(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn117962(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn005376(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn148427(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn001583(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn394064(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn548661(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn290542(a,b){var c=a*46+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn381670(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn109422(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn621283(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn665401(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn686424(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn855495(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn394202(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn230237(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn699992(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn122109(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn378682(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn365376(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn953978(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn855450(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn269683(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn792557(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn509402(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn545808(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn850788(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn002081(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn191325(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn575955(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn375219(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn650956(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn009753(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn016836(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn138764(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn718615(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn312332(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn448326(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn882503(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn854771(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn639191(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn546110(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn443041(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn527457(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn748495(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn348277(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn202690(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn415289(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn790800(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn932408(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn641732(a,b){var c=a*28+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn264910(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn170935(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn720085(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn946596(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn406309(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn654780(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn986511(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn601247(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn774063(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn622771(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn133438(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn720857(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn551910(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn700536(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn842397(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn416886(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn277113(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn089972(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn315399(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn348367(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn101402(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn566483(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn290617(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn616766(a,b){var c=a*65+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn604659(a,b){var c=a*71+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn306030(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn471906(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn942259(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn163588(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn325004(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn444206(a,b){var c=a*4+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn782448(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn458284(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn875315(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn934925(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn316424(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn389114(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn232859(a,b){var c=a*92+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn434401(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn934787(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn104521(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn126263(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn245803(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn255391(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn828286(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn683807(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn923361(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn974962(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn051688(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn298469(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn506277(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn752474(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn165802(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn177051(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn917424(a,b){var c=a*35+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn177393(a,b){var c=a*3+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn570355(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn641318(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn975915(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn899758(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn598797(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn387679(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn336292(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn865991(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn315956(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn938186(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn535575(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn068700(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn607725(a,b){var c=a*25+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn576577(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn980656(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn728356(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn987117(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn552795(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn874617(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn665169(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn369848(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn701214(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn886180(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn385828(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn108682(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn385741(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn760648(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn189158(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn549138(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn214892(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn116353(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn246271(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn263253(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn229114(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn774286(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn525004(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn727591(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn886669(a,b){var c=a*57+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn282658(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn574174(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn848226(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn133065(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn204466(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn638246(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn021762(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn255093(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn410184(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn791950(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn341242(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn716566(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn705266(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn774348(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn579068(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn823621(a,b){var c=a*75+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn614069(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn058910(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn440539(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn563559(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn537168(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn755556(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn495780(a,b){var c=a*71+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn196613(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn761099(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn086891(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn144058(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn864233(a,b){var c=a*2+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn746064(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn162597(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn830246(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn169123(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn113151(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn781672(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn589978(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn921672(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn626690(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn156037(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn007202(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn184540(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn988787(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn296172(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn195613(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn245154(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn914126(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn874216(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn066538(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn736325(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn676887(a,b){var c=a*97+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn339709(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn721765(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn608821(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn803197(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn546752(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn251254(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn785244(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn125713(a,b){var c=a*36+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn699773(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn053057(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn774648(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn282675(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn177271(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn954795(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn375752(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn772624(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn242022(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn026970(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn475966(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn708216(a,b){var c=a*10+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn761441(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn283158(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn169465(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn030416(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn126107(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn630104(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn932887(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn318605(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn646904(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn302828(a,b){var c=a*7+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn218507(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn574748(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn619501(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn606955(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn054754(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn852443(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn874487(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn736032(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn371837(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn623568(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn204491(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn580291(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn749989(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn449192(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn610121(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn935135(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn347544(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn841847(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn186678(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn842924(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn651400(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn863706(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn842348(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn442712(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn458723(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn855290(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn684626(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn337185(a,b){var c=a*15+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn680107(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn955961(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn957520(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn175054(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn340345(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn955882(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn044901(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn390496(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn757962(a,b){var c=a*53+b;for(var i=0;i<17;i+