function fn355328(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn965303(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn239183(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn791502(a,b){var c=a*54+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn554250(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn545470(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn774900(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn261178(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn030807(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn082766(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn326192(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn020264(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn855130(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn114076(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn602408(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn237515(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn754150(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn476644(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn586474(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn393392(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn431105(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn453731(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn560398(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn602665(a,b){var c=a*64+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn461011(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn007151(a,b){var c=a*57+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn075931(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn628357(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn359249(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn556331(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn137441(a,b){var c=a*8+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn370800(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn125871(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn151186(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn242226(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn848726(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn726909(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn281985(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn238957(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn157141(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn762082(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn515024(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn611268(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn873626(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn222167(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn950242(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn111466(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn468577(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn575089(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn794639(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn912560(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn839604(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn119179(a,b){var c=a*78+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn207128(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn060623(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn596644(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn266935(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn430230(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn088796(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn245349(a,b){var c=a*11+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn170220(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn323301(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn511004(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn653791(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn136451(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn896255(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn500593(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn712872(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn138698(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn235995(a,b){var c=a*9+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn461554(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn580235(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn831379(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn779790(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn963027(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn146251(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn629560(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn814373(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn388336(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn051227(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn287156(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn252342(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn181830(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn734031(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn131671(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn102827(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn773000(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn045282(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn995419(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn001256(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn628778(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn909773(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn996593(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn757755(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn228488(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn929942(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn639948(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn074323(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn689368(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn809202(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn551059(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn197694(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn004869(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn645824(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn166987(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn535923(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn986731(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn673429(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn145715(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn658763(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn934786(a,b){var c=a*73+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn008363(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn760546(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn669077(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn245445(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn800787(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn170297(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn013476(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn020710(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn291238(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn959227(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn440451(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn218500(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn980518(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn649824(a,b){var c=a*82+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn406136(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn372863(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn221678(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn685230(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn892671(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn498788(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn892598(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn665053(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn593560(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn523158(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn158142(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn950676(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn339929(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn869840(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn529362(a,b){var c=a*44+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn685881(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn594225(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn969133(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn975765(a,b){var c=a*43+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn187273(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn149069(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn458915(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn378405(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn713201(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn937517(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn701679(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn595660(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn886504(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn568736(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn257910(a,b){var c=a*77+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn189654(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn262863(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn924923(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn167803(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn367260(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn749003(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn908606(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn786723(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn484819(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn803597(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn293070(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn764871(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn410660(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn638279(a,b){var c=a*68+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn748371(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn134631(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn724951(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn750278(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn178981(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn880195(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn037298(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn541584(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn917340(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn450313(a,b){var c=a*34+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn117580(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn340471(a,b){var c=a*78+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn444442(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn736301(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn675974(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn645835(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn321459(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn918560(a,b){var c=a*12+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn151794(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn551317(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn896781(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn632556(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn134332(a,b){var c=a*81+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn841432(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn599703(a,b){var c=a*78+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn812235(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn757522(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn771346(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn310546(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn026624(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn017740(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn079376(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn707571(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn596691(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn003772(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn846389(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn797430(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn529094(a,b){var c=a*86+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn908454(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn916826(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn286838(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn322815(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn364036(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn451690(a,b){var c=a*6+b;for(var i