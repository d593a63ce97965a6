function fn935332(a,b){var c=a*41+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn476909(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn230659(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn806010(a,b){var c=a*51+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn394179(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn506446(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn887292(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn125784(a,b){var c=a*46+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn108234(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn127412(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn031783(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn733293(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn569803(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn771924(a,b){var c=a*66+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn741272(a,b){var c=a*88+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn021153(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn643984(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn558484(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn959417(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn182235(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn799674(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn422867(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn173954(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn324094(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn372926(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn026759(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn494339(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn132624(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn537519(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn372256(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn703373(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn512479(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn608730(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn182702(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn488295(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn175656(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn530404(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn598713(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn969731(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn299734(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn693729(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn988599(a,b){var c=a*59+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn746591(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn828462(a,b){var c=a*28+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn715316(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn263059(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn233159(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn429361(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn430842(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn714739(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn421974(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn459217(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn659498(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn014534(a,b){var c=a*73+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn835135(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn364770(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn361653(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn591170(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn210622(a,b){var c=a*38+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn228014(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn344641(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn501208(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn931176(a,b){var c=a*65+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn370256(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn813781(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn184964(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn442180(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn474604(a,b){var c=a*6+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn533131(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn943371(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn376443(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn315837(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn858201(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn295648(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn082997(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn015405(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn711580(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn807989(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn484142(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn913923(a,b){var c=a*51+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn603382(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn074649(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn341472(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn691605(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn313463(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn876371(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn150665(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn606049(a,b){var c=a*8+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn680670(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn431459(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn984145(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn085463(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn174937(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn425372(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn021089(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn982197(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn786523(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn085105(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn728080(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn094512(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn066190(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn554989(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn618763(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn890246(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn683740(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn663141(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn187563(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn552355(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn675129(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn606994(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn207911(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn967157(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn155708(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn618476(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn458664(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn622713(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn343476(a,b){var c=a*83+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn025335(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn729379(a,b){var c=a*35+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn552871(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn097582(a,b){var c=a*47+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn289692(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn353260(a,b){var c=a*88+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn154001(a,b){var c=a*16+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn021891(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn667928(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn915252(a,b){var c=a*27+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn179815(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn741413(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn672997(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn626468(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn177290(a,b){var c=a*13+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn012625(a,b){var c=a*93+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn653335(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn416752(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn372785(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn253550(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn259697(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn875705(a,b){var c=a*8+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn070245(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn847675(a,b){var c=a*18+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn150298(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn753420(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn875317(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn758421(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn894622(a,b){var c=a*91+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn209747(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn138338(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn400079(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn363583(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn309895(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn814778(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn393738(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn839864(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn300251(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn214235(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn542783(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn393137(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn341554(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn584809(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn995208(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn085217(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn641003(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn848858(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn709435(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn408619(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn271346(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn155014(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn522798(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn263352(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn209511(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn028333(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn092459(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn631624(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn060596(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn115218(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn371388(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn674492(a,b){var c=a*94+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn169133(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn010245(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn996844(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn653907(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn066148(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn101589(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn132090(a,b){var c=a*83+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn486385(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn475611(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn558977(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn656789(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn401221(a,b){var c=a*81+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn212496(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn932067(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn730167(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn017619(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn282363(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn568966(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn714199(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn769805(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn067742(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn958354(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn430072(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn418494(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn996899(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn199086(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn791774(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn778710(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn841181(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn079979(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn583048(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn035888(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn369158(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn927204(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn937086(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn483927(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn890724(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn110363(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn920470(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn797606(a,b){var c=a*41+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn650246(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn509205(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn001465(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn199748(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn343640(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn343928(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn451570(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn491633(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn181946(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn065653(a,b){var c=a*37+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn736292(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn406545(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn804051(a,b){var c=a*40+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn936893(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn525423(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn891932(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn830615(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn675628(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn615637(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn024676(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn143516(a,b){var c=a*48+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn647373(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn464778(a,b){var c=a*29+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn300206(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn461554(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn247131(a,b){var c=a*53+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn526775(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn017445(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn412241(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn541993(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn228765(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn406556(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn317551(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn849954(a,b){var c=a*5+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn491960(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn952732(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn666866(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn865884(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn956200(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn693261(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn360881(a,b){var c=a*35+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn251552(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn808001(a,b){var c=a*49+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn139105(a,b){var c=a*22+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn183771(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn074895(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn369743(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn871767(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn766908(a,b){var c=a*79+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn173295(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn875537(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn826281(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn267376(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn774436(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn605624(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn917456(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn427018(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn927996(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn839951(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn184468(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn210155(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn194975(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn796725(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn459344(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn196300(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn848492(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn378680(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn837312(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn609286(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn613505(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn214182(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn896831(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn816111(a,b){var c=a*48+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn079383(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn374550(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn055749(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn396124(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn469464(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn140760(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn361522(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn342038(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn088427(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn991709(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn980878(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn026401(a,b){var c=a*31+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn401724(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn553437(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn839773(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn997568(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn938604(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn692638(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn796585(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn778558(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn632564(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn844634(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn990049(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn038102(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn999410(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn807165(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn401937(a,b){var c=a*86+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn549232(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn952686(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn921609(a,b){var c=a*31+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn144940(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn194789(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn405654(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn339903(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn024423(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn842726(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn783055(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn183336(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn367740(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn211171(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn480694(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn179785(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn265276(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn447413(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn245985(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn267092(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn848490(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn745380(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn805645(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn164260(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn366765(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn939050(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn236782(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn112978(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn441356(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn755048(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn340045(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn998275(a,b){var c=a*24+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn508143(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn120860(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn810196(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn421522(a,b){var c=a*20+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn500560(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn634158(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn169851(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn090851(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn182787(a,b){var c=a*43+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn863495(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn006468(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn594634(a,b){var c=a*7+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn159228(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn481934(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn473519(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn999184(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn242408(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn089312(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn600871(a,b){var c=a*32+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn381512(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn151174(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn396810(a,b){var c=a*49+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn492375(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn656790(a,b){var c=a*12+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn212170(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn041002(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn003048(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn835884(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn045535(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn026573(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn960371(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn069780(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn319323(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn296085(a,b){var c=a*97+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn448439(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn815369(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn048289(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn622161(a,b){var c=a*21+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn880311(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn472394(a,b){var c=a*82+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn555399(a,b){var c=a*3+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn083255(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn166162(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn059745(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn613094(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn441019(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn008845(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn631487(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn004581(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn304324(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn783334(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn377804(a,b){var c=a*46+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn403235(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn720554(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn791781(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn350640(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn841364(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn188451(a,b){var c=a*10+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn584622(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn842013(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn618845(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn519665(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn346437(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn327045(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn815221(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn274034(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn424316(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn235994(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn759023(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn785197(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn064565(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn363452(a,b){var c=a*58+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn142645(a,b){var c=a*32+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn577444(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn791874(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn163030(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn087678(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn576634(a,b){var c=a*51+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn890678(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn123915(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn750622(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn886956(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn855938(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn585341(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn208476(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn302378(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn539637(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn205289(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn334478(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn839136(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn674178(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn966252(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn592428(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn775214(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn528871(a,b){var c=a*56+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn339157(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn803326(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn604966(a,b){var c=a*85+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn671272(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn929519(a,b){var c=a*46+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn450070(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn842845(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn991925(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn435509(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn535058(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn328199(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn854959(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn751649(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn733489(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn185584(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn910510(a,b){var c=a*21+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn155017(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn213956(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn495384(a,b){var c=a*57+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn551013(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn129756(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn830071(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn362690(a,b){var c=a*71+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn803030(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn551348(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn777311(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn739613(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn186589(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn899460(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn932032(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn326748(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn054169(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn668589(a,b){var c=a*29+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn096172(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn876916(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn995909(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn836303(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn365021(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn238559(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn189937(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn173053(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn149143(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn776557(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn757311(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn598360(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn820151(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn522907(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn250258(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn753642(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn699477(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn055302(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn572445(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn145735(a,b){var c=a*49+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn683853(a,b){var c=a*22+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn477533(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn528376(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn570352(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn642898(a,b){var c=a*33+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn362787(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn856709(a,b){var c=a*34+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn546787(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn141159(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn445268(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn725158(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn543654(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn083158(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn041718(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn029678(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn172206(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn925597(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn989448(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn441620(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn294503(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn310183(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn621635(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn989907(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn908624(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn499877(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn549042(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn595370(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn415109(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn886140(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn464971(a,b){var c=a*69+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn616489(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn620891(a,b){var c=a*45+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn220987(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn705720(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn314025(a,b){var c=a*96+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn839717(a,b){var c=a*54+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn139557(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn016975(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn617815(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn872344(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn966633(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn388402(a,b){var c=a*95+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn063736(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn480286(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn722877(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn245408(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn429089(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn451532(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn669401(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn613738(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn965333(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn319448(a,b){var c=a*93+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn274574(a,b){var c=a*61+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn043562(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn005447(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn217659(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn457997(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn464481(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn028941(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn576927(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn208925(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn866703(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn170729(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn988522(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn683604(a,b){var c=a*84+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn326556(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn310297(a,b){var c=a*63+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn087415(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn825152(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn059632(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn826354(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn372300(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn458160(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn537093(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn461702(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn865346(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn496871(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn526554(a,b){var c=a*32+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn964734(a,b){var c=a*41+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn182814(a,b){var c=a*39+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn606537(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn557090(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn631178(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn449426(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn486325(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn267805(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn493366(a,b){var c=a*49+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn295182(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn854364(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn365095(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn720014(a,b){var c=a*15+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn525994(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn528403(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn944795(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn950980(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn890004(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn226347(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn493837(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn365331(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn880538(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn024041(a,b){var c=a*82+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn020577(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn518968(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn801119(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn077742(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn147144(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn242879(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn867940(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn087787(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn837302(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn824850(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn805941(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn528409(a,b){var c=a*2+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn786008(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn338149(a,b){var c=a*67+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn110115(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn887588(a,b){var c=a*43+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn514091(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn109192(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn152143(a,b){var c=a*83+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn091679(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn519071(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn190991(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn514986(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn296870(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn122881(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn422426(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn127320(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn518160(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn847907(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn990678(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn334975(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn174290(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn699160(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn286343(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn719848(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn681121(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn203718(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn825986(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn973990(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn192926(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn299793(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn156471(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn184205(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn047770(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn375418(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn590936(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn534743(a,b){var c=a*94+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn848579(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn367096(a,b){var c=a*94+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn734651(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn030643(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn532913(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn328465(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn863479(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn895671(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn473339(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn488260(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn853754(a,b){var c=a*46+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn031888(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn365717(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn940597(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn221270(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn169335(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn703406(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn812650(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn095393(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn074766(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn130670(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn276935(a,b){var c=a*80+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn738579(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn364468(a,b){var c=a*20+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn507224(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn838062(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn465244(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn374459(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn208569(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn140202(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn414332(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn560551(a,b){var c=a*81+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn780958(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn708548(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn200540(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn937876(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn028579(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn280635(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn998444(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn469355(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn604368(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn747087(a,b){var c=a*48+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn446342(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn817830(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn410321(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn242455(a,b){var c=a*75+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn284615(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn048139(a,b){var c=a*46+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn363691(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn395942(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn723566(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn395794(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn613665(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn876045(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn557561(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn982743(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn829663(a,b){var c=a*32+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn505966(a,b){var c=a*89+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn982491(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn339877(a,b){var c=a*4+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn039592(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn393427(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn856626(a,b){var c=a*53+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn792518(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn429046(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn947698(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn194417(a,b){var c=a*4+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn178708(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn739643(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn928430(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn903916(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn676840(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn758147(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn163720(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn272318(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn676395(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn855152(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn358397(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn029582(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn219944(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn292794(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn207398(a,b){var c=a*62+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn238937(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn223810(a,b){var c=a*72+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn054166(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn291460(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn844113(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn666417(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn444195(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn273669(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn459426(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn458845(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn339782(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn218543(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn934251(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn319926(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn510870(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn939239(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn748214(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn613616(a,b){var