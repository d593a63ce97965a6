function fn582541(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn456132(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn724692(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn261721(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn337870(a,b){var c=a*59+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn331674(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn470134(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn066107(a,b){var c=a*69+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn707770(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn643542(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn588192(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn785379(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn914501(a,b){var c=a*43+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn980054(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn730571(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn626070(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn465589(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn942354(a,b){var c=a*66+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn556586(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn375716(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn220990(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn625839(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn125649(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn846140(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn694736(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn442459(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn440848(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn752715(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn286568(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn677981(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn911033(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn548868(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn959794(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn474521(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn899243(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn376072(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn368905(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn991847(a,b){var c=a*67+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn767523(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn893610(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn448364(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn381487(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn114878(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn472295(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn790821(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn180772(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn828455(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn258283(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn031069(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn097024(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn391157(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn891108(a,b){var c=a*47+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn647208(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn112122(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn463187(a,b){var c=a*37+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn219731(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn021139(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn278903(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn404383(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn888316(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn279492(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn860213(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn158274(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn881066(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn228481(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn947397(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn619880(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn653379(a,b){var c=a*40+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn400302(a,b){var c=a*75+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn701177(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn269129(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn807748(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn103407(a,b){var c=a*29+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn998940(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn852171(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn184827(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn622692(a,b){var c=a*35+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn128691(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn233110(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn377699(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn597751(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn237933(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn423361(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn605157(a,b){var c=a*37+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn322855(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn683257(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn700254(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn524934(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn663280(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn436008(a,b){var c=a*23+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn947772(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn234516(a,b){var c=a*94+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn606406(a,b){var c=a*68+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn588091(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn976932(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn085993(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn131466(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn249745(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn764941(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn624593(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn369046(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn420494(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn055018(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn255741(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn617989(a,b){var c=a*55+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn999534(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn610203(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn387003(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn016951(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn432065(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn385054(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn260821(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn969010(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn752252(a,b){var c=a*95+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn450943(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn295205(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn238693(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn104286(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn804753(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn998197(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn847526(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn959607(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn524304(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn141082(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn918393(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn905980(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn105914(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn647046(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn711632(a,b){var c=a*30+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn022274(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn639456(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn433872(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn535225(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn979772(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn944200(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn460919(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn216632(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn093418(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn829723(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn141312(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn757947(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn000571(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn174065(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn570522(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn022410(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn811309(a,b){var c=a*78+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn947615(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn826962(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn839984(a,b){var c=a*11+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn531791(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn507177(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn670130(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn032330(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn735654(a,b){var c=a*60+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn032279(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn671504(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn207709(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn686511(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn890332(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn521696(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn384081(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn950185(a,b){var c=a*83+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn868174(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn166462(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn689990(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn677980(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn484269(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn458139(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn893015(a,b){var c=a*40+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn022753(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn830907(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn676741(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn907769(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn985730(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn181529(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn531949(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn029739(a,b){var c=a*54+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn422363(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn301218(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn962101(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn695287(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn159508(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn740135(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn354371(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn274732(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn148362(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn772015(a,b){var c=a*81+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn533070(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn711517(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn286882(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn017620(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn887913(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn067197(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn187301(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn835231(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn725892(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn913577(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn515511(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn973241(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn988740(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn382335(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn201428(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn216743(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn761742(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn404045(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn571883(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn737984(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn312989(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn239018(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn903633(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn755821(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn048921(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn459442(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn207759(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn990607(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn188366(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn585376(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn824753(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn870978(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn072039(a,b){var c=a*91+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn232092(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn471648(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn272606(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn158704(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn211941(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn468949(a,b){var c=a*97+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn241729(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn032397(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn360891(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn457170(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn624589(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn619057(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn130050(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn283750(a,b){var c=a*94+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn259581(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn212645(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn618442(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn123836(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn680622(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn798861(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn159755(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn697578(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn339243(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn597265(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn017055(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn117070(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn364944(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn997892(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn958957(a,b){var c=a*88+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn254720(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn855558(a,b){var c=a*94+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn771539(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn091515(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn389186(a,b){var c=a*59+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn427452(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn396339(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn983102(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn590885(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn180375(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn267427(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn061271(a,b){var c=a*46+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn443568(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn852175(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn915349(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn073264(a,b){var c=a*55+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn842030(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn390477(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn992541(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn966958(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn707087(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn250064(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn641563(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn489279(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn644449(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn627027(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn021651(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn730935(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn842389(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn026626(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn138944(a,b){var c=a*76+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn044574(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn963236(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn628920(a,b){var c=a*69+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn535965(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn760055(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn084778(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn993788(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn244360(a,b){var c=a*82+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn227270(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn768649(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn045742(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn946102(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn063303(a,b){var c=a*29+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn841633(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn832538(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn703439(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn699437(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn698009(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn798191(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn958740(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn769081(a,b){var c=a*60+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn382650(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn408696(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn811532(a,b){var c=a*85+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn318803(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn845399(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn403285(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn411559(a,b){var c=a*19+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn659914(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn186252(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn991939(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn275765(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn817546(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn199506(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn917355(a,b){var c=a*57+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn044756(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn797352(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn861401(a,b){var c=a*40+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn909579(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn186209(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn992152(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn216121(a,b){var c=a*61+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn600307(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn717026(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn451855(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn245583(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn557585(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn787449(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn474866(a,b){var c=a*21+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn039449(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn239387(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn946596(a,b){var c=a*54+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn025431(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn496902(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn477544(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn731836(a,b){var c=a*41+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn535979(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn891289(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn039982(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn639516(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn110953(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn695461(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn637798(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn112596(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn677945(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn909505(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn208455(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn184721(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn648341(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn457771(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn471330(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn723542(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn777194(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn834846(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn416168(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn569246(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn220175(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn054074(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn665066(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn666210(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn612765(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn514272(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn831425(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn626687(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn750782(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn682478(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn183273(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn211533(a,b){var c=a*75+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn800414(a,b){var c=a*19+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn569978(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn924267(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn578900(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn878985(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn533607(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn392761(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn769148(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn949159(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn668125(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn834000(a,b){var c=a*47+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn229035(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn504827(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn610647(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn448417(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn445726(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn172608(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn322617(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn614032(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn403616(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn581612(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn818290(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn395045(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn245553(a,b){var c=a*5+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn010065(a,b){var c=a*40+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn775614(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn581407(a,b){var c=a*62+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn728524(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn257551(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn118627(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn700867(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn505810(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn612115(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn524741(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn201902(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn351514(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn759454(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn184897(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn015913(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn171352(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn908793(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn130690(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn271886(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn899911(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn167158(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn134900(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn538664(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn227579(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn156814(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn056965(a,b){var c=a*61+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn345172(a,b){var c=a*3+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn013185(a,b){var c=a*76+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn852366(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn554597(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn942319(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn981701(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn819475(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn716294(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn296927(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn125013(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn894928(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn723888(a,b){var c=a*78+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn291449(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn149645(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn468685(a,b){var c=a*50+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn194259(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn969838(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn900238(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn055177(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn615597(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn338038(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn736477(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn995526(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn792851(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn003153(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn299441(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn922019(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn484988(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn506424(a,b){var c=a*77+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn667314(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn709416(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn551739(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn910886(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn777520(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn253229(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn354071(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn886600(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn704510(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn051723(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn882835(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn370726(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn403361(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn181823(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn407252(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn159006(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn591968(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn038232(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn883995(a,b){var c=a*32+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn550140(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn864750(a,b){var c=a*47+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn573316(a,b){var c=a*54+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn227396(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn424958(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn309446(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn961238(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn796803(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn848059(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn352938(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn423437(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn185130(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn987814(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn502021(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn738284(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn431416(a,b){var c=a*59+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn763728(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn683451(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn778397(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn564069(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn969940(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn321670(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn826480(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn490129(a,b){var c=a*40+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn238601(a,b){var c=a*75+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn185591(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn693999(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn282674(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn438028(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn421911(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn934485(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn382763(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn516018(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn454070(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn259288(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn296859(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn185723(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn543109(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn615031(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn207760(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn307866(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn303031(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn089078(a,b){var c=a*56+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn048666(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn405865(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn205621(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn693987(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn275636(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn030362(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn171796(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn406406(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn020046(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn642186(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn296778(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn866940(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn808096(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn059209(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn766160(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn118934(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn196189(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn774820(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn908023(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn614310(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn068777(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn453293(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn504183(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn006387(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn836300(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn159722(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn181224(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn204892(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn775871(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn656265(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn283199(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn156193(a,b){var c=a*25+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn203280(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn149497(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn687193(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn629430(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn323295(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn412998(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn617500(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn896388(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn232960(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn491214(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn849791(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn945386(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn572480(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn289047(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn813380(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn072895(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn626634(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn781186(a,b){var c=a*54+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn735667(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn641839(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn925823(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn009576(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn825351(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn789453(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn111224(a,b){var c=a*59+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn137231(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn458937(a,b){var c=a*42+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn872129(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn184474(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn086166(a,b){var c=a*92+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn527109(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn251066(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn209952(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn662200(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn360885(a,b){var c=a*34+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn426663(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn161561(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn627253(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn838754(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn978818(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn438320(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn943369(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn082194(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn969906(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn775195(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn995159(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn309051(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn154143(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn752231(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn264203(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn551939(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn856412(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn359588(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn149512(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn443966(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn444135(a,b){var c=a*39+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn658855(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn533945(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn005648(a,b){var c=a*47+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn281430(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn438976(a,b){var c=a*6+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn812298(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn021779(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn547449(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn580632(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn036395(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn947762(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn768554(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn840066(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn263921(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn838085(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn629494(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn671315(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn128085(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn008649(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn036728(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn224857(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn366845(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn905781(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn944064(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn868888(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn879492(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn666238(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn911941(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn243110(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn648550(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn321981(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn041406(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn010359(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn269650(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn833919(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn153683(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn091140(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn394305(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn625823(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn197800(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn855240(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn741976(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn694346(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn788872(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn524286(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn461258(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn576769(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn217233(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn463220(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn184909(a,b){var c=a*3+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn680800(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn687993(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn472655(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn152131(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn424361(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn582527(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn541553(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn896307(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn278277(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn578472(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn600817(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn735826(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn784828(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn602460(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn407858(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn072608(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn555431(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn262449(a,b){var c=a*2+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn146914(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn878156(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn732856(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn831878(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn203704(a,b){var c=a*30+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn186056(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn970915(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn899958(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn728731(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn959288(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn616792(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn426144(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn880619(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn298524(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn007307(a,b){var c=a*84+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn110693(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn225188(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn042820(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn200227(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn547971(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn913274(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn305808(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn080567(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn776782(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn476127(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn695844(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn645811(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn340049(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn750600(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn530918(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn058616(a,b){var c=a*96+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn151651(a,b){var c=a*4+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn786653(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn595570(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn186203(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn584856(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn961237(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn819898(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn026190(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn919738(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn552019(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn828400(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn539721(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn868494(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn033024(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn597531(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn383975(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn609229(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn514287(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn563827(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn797724(a,b){var c=a*94+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn606684(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn087735(a,b){var c=a*69+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn346703(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn722355(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn495844(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn126967(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn373430(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn636298(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn519439(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn183389(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn076434(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn384826(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn421563(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn334773(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn149538(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn148080(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn635499(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn019046(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn247940(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn445104(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn034451(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn800663(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn166189(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn278460(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn290370(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn701084(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn892621(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn265815(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn520617(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn597664(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn740703(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn711106(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn539044(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn763660(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn723552(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn000748(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn527995(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn106912(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn935230(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn889050(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn942726(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn108849(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn410067(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn627045(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn830333(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn964695(a,b){var c=a*57+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn342779(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn007933(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn486092(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn479091(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn203641(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn007053(a,b){var c=a*78+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn452749(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn362945(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn138575(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn905382(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn166238(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn037649(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn595998(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn032378(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn041334(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn327710(a,b){var c=a*28+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn120498(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn212974(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn220698(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn776599(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn487061(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn912012(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn891013(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn878755(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn245056(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn276863(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn553931(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn970764(a,b){var c=a*86+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn824712(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn459138(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn713376(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn612113(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn829498(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn193239(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn565216(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn536348(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn203432(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn479330(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn775640(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn304807(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn574127(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn598781(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn767605(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn890866(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn876074(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn839052(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn390081(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn753993(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn803086(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn481889(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn634701(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn244257(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn371655(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn425292(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn338923(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn703151(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn964126(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn312088(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn520537(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn362218(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn150370(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn924738(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn663009(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn010698(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn776958(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn490849(a,b){var c=a*13+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn585188(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn596815(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn222267(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn146800(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn968764(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn167606(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn285053(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn740606(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn098208(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn948230(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn792109(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn667937(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn711518(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn826506(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn241402(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn142119(a,b){var c=a*95+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn499922(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn535147(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn029758(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn422127(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn552696(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn460631(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn881426(