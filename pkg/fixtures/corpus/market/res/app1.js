function fn007780(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn626067(a,b){var c=a*67+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn069410(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn153610(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn612297(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn221282(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn676346(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn294588(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn613649(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn199693(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn345279(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn448789(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn712075(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn877544(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn495157(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn852644(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn128453(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn045522(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn949268(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn211387(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn935568(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn199219(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn780821(a,b){var c=a*55+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn947470(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn568908(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn440178(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn661975(a,b){var c=a*31+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn973330(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn029834(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn378600(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn217037(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn931176(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn297977(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn614137(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn960926(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn667977(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn844382(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn740930(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn829950(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn781915(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn880705(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn506085(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn134913(a,b){var c=a*4+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn043636(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn107898(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn671883(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn990678(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn876548(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn291352(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn671141(a,b){var c=a*76+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn422131(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn582317(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn040101(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn621077(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn806444(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn753412(a,b){var c=a*69+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn131505(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn485462(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn232764(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn540305(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn577111(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn989727(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn502174(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn723548(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn169307(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn543840(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn284670(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn122129(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn357209(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn324942(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn286486(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn833553(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn269412(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn645351(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn732220(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn455053(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn116202(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn968974(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn697092(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn445771(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn738545(a,b){var c=a*64+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn495305(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn369634(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn767730(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn679451(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn229326(a,b){var c=a*25+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn608414(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn831215(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn298395(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn069124(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn798192(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn228903(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn747407(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn086895(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn653250(a,b){var c=a*86+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn031311(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn179051(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn387056(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn953078(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn559981(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn303542(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn138457(a,b){var c=a*17+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn181367(a,b){var c=a*78+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn670882(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn732711(a,b){var c=a*65+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn932015(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn901040(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn781184(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn576028(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn460786(a,b){var c=a*84+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn967289(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn634918(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn675705(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn507675(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn405220(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn190690(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn719415(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn095111(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn786758(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn421512(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn549101(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn029126(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn820379(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn631234(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn326918(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn055580(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn796300(a,b){var c=a*48+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn258983(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn622087(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn630966(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn743935(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn409143(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn912146(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn603829(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn225873(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn712020(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn389764(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn593712(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn113545(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn251231(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn365621(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn143533(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn190456(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn079583(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn001443(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn928780(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn299393(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn132835(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn445512(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn511470(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn437713(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn733106(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn293100(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn395093(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn015211(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn105744(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn965410(a,b){var c=a*62+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn436630(a,b){var c=a*55+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn222040(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn043084(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn009802(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn912485(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn958810(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn656709(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn762126(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn606834(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn755708(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn873521(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn217160(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn706802(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn962445(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn514802(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn767338(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn087404(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn106473(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn072229(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn430805(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn442761(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn277630(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn648491(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn815764(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn845417(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn643822(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn785997(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn366344(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn140590(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn387729(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn358902(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn297255(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn883429(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn027900(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn385709(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn573418(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn442031(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn012544(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn217988(a,b){var c=a*50+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn390376(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn176302(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn466444(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn449606(a,b){var c=a*57+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn640880(a,b){var c=a*76+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn160473(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn262647(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn306638(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn117199(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn387694(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn551621(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn164728(a,b){var c=a*82+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn446517(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn954616(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn075530(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn426087(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn655901(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn128403(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn757908(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn505425(a,b){var c=a*6+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn692540(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn424563(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn834755(a,b){var c=a*26+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn540538(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn126286(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn459776(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn721609(a,b){var c=a*96+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn183058(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn041011(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn628803(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn501812(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn068262(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn160906(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn836458(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn803511(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn846793(a,b){var c=a*60+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn651071(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn772281(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn438017(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn647340(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn391041(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn737829(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn731626(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn980889(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn414261(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn314211(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn510953(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn274021(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn119788(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn771646(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn189023(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn436489(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn802646(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn991932(a,b){var c=a*37+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn931425(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn722987(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn234329(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn350558(a,b){var c=a*10+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn700728(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn572129(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn321963(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn562141(a,b){var c=a*65+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn451699(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn659458(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn330840(a,b){var c=a*67+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn904870(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn840443(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn609129(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn669516(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn474627(a,b){var c=a*20+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn751561(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn743511(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn587387(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn739957(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn458475(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn643771(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn127984(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn393875(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn885473(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn027125(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn697764(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn387002(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn988115(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn243517(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn066807(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn334057(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn765669(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn397521(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn345124(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn237486(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn401146(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn426102(a,b){var c=a*52+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn794850(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn420970(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn620806(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn682950(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn776024(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn735218(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn126098(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn376298(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn805659(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn152366(a,b){var c=a*16+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn266171(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn374425(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn670504(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn192685(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn702458(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn220639(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn276231(a,b){var c=a*75+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn735174(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn508510(a,b){var c=a*48+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn787629(a,b){var c=a*45+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn003647(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn374769(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn844254(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn564981(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn099666(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn590217(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn396268(a,b){var c=a*66+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn030098(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn044592(a,b){var c=a*74+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn602690(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn839616(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn484449(a,b){var c=a*3+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn263064(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn405512(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn123263(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn582867(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn351161(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn531494(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn663776(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn967879(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn847188(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn114779(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn885232(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn295449(a,b){var c=a*12+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn757982(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn924899(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn535974(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn287898(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn248986(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn576104(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn277122(a,b){var c=a*26+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn791494(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn154981(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn096841(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn946377(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn714375(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn596585(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn300710(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn322019(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn116535(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn544613(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn500753(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn797111(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn269531(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn338889(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn394644(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn303566(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn335085(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn877044(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn282142(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn053943(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn563779(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn294951(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn664981(a,b){var c=a*82+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn566985(a,b){var c=a*54+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn772156(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn553103(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn427650(a,b){var c=a*47+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn819211(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn604602(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn276337(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn880700(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn499331(a,b){var c=a*15+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn596440(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn440532(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn544135(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn736894(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn392691(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn708055(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn850802(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn135386(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn336667(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn753439(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn960199(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn343061(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn930997(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn825676(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn023125(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn917080(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn725088(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn629882(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn373994(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn906092(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn119028(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn900884(a,b){var c=a*59+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn782661(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn299123(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn880453(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn400509(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn640311(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn013007(a,b){var c=a*91+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn662344(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn271039(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn060698(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn953608(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn259636(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn765553(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn620238(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn660770(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn538363(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn130556(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn134245(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn801984(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn033047(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn448260(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn117097(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn783607(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn349704(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn951384(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn297316(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn208832(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn131915(a,b){var c=a*70+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn238120(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn362118(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn921245(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn018419(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn917563(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn165967(a,b){var c=a*16+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn523999(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn991510(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn674153(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn000451(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn295001(a,b){var c=a*20+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn359221(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn329767(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn787657(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn263948(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn096426(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn227851(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn366258(a,b){var c=a*82+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn462479(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn366093(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn688576(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn925253(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn239709(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn185872(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn820855(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn001868(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn890696(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn134482(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn468564(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn901648(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn339147(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn600477(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn830675(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn378906(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn500642(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn593523(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn422707(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn374385(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn474720(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn211692(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn055291(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn387521(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn172219(a,b){var c=a*67+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn256280(a,b){var c=a*3+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn465679(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn394017(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn720458(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn487341(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn607096(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn489889(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn744041(a,b){var c=a*26+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn012509(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn083699(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn735241(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn032539(a,b){var c=a*15+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn388664(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn242606(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn836185(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn009880(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn939529(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn055079(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn844161(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn030593(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn184052(a,b){var c=a*85+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn259442(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn950084(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn671670(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn537176(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn633526(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn270066(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn365665(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn935706(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn003874(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn179804(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn229886(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn619242(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn689600(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn493601(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn829712(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn074788(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn790614(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn596692(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn280948(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn844611(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn886953(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn081807(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn629417(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn295547(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn716267(a,b){var c=a*87+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn019939(a,b){var c=a*12+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn044794(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn818562(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn298681(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn299357(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn562117(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn751505(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn246896(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn202972(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn240406(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn700243(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn504043(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn090755(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn296478(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn717722(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn002975(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn167710(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn292579(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn238336(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn233936(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn349022(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn858533(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn601816(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn547134(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn289934(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn079586(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn334845(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn955936(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn978461(a,b){var c=a*37+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn436703(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn592001(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn851005(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn822902(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn398186(a,b){var c=a*39+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn912579(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn046560(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn310721(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn109918(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn684247(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn168523(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn986596(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn585231(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn480144(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn038142(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn378297(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn364854(a,b){var c=a*39+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn392199(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn490251(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn008025(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn370672(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn705359(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn079016(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn065653(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn724059(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn062864(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn710625(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn437914(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn223462(a,b){var c=a*29+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn630343(a,b){var c=a*21+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn202250(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn053976(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn612182(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn062469(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn672217(a,b){var c=a*3+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn003512(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn512900(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn199573(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn135044(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn389991(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn682687(a,b){var c=a*24+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn586062(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn293255(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn267040(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn163838(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn452980(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn959988(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn089286(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn119366(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn345267(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn477136(a,b){var c=a*75+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn708097(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn261553(a,b){var c=a*29+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn835783(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn929659(a,b){var c=a*29+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn153754(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn377382(a,b){var c=a*69+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn894835(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn205076(a,b){var c=a*92+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn755344(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn365843(a,b){var c=a*47+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn819944(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn009111(a,b){var c=a*64+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn941734(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn753000(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn210412(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn768910(a,b){var c=a*32+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn046845(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn808717(a,b){var c=a*50+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn999756(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn718489(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn985752(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn503879(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn098240(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn773976(a,b){var c=a*36+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn779185(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn179107(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn449676(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn465166(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn089926(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn984268(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn409479(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn683862(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn277587(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn089055(a,b){var c=a*50+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn813551(a,b){var c=a*15+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn169731(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn869221(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn139272(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn709045(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn613086(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn224324(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn914870(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn196588(a,b){var c=a*90+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn478204(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn738391(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn556836(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn411174(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn219630(a,b){var c=a*2+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn354015(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn745759(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn887092(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn259592(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn918324(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn103912(a,b){var c=a*41+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn008497(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn628643(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn589594(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn980281(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn731849(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn160561(a,b){var c=a*38+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn640833(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn869570(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn920575(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn537969(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn782672(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn032928(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn860810(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn482061(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn244105(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn932310(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn301971(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn814862(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn078424(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn544433(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn253091(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn201411(a,b){var c=a*38+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn579159(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn589312(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn682341(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn625927(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn256367(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn473281(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn307891(a,b){var c=a*3+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn801557(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn996119(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn371987(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn648603(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn395375(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn361217(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn176544(a,b){var c=a*11+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn780342(a,b){var c=a*67+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn693442(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn289932(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn446269(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn215757(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn217805(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn265735(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn838826(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn672713(a,b){var c=a*40+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn465295(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn630448(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn401288(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn088470(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn945144(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn141963(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn373578(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn200070(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn744922(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn973237(a,b){var c=a*68+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn152166(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn222407(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn893357(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn521616(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn111886(a,b){var c=a*27+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn805799(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn418236(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn790785(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn952980(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn620486(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn214470(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn722667(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn414908(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn403569(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn264959(a,b){var c=a*81+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn046223(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn849164(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn852071(a,b){var c=a*53+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn314246(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn614693(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn451489(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn348214(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn246338(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn624912(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn026509(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn877653(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn285587(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn555300(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn649599(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn737780(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn506605(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn329867(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn069486(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn841313(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn958045(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn493488(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn421987(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn604206(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn755727(a,b){var c=a*95+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn301955(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn607499(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn128351(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn583638(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn853280(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn836093(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn300158(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn469992(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn345000(a,b){var c=a*69+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn037015(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn070638(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn900457(a,b){var c=a*33+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn300339(a,b){var c=a*2+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn240297(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn602069(a,b){var c=a*40+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn410571(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn934945(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn433007(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn888563(a,b){var c=a*30+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn940585(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn941853(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn083688(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn802370(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn747603(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn616623(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn458581(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn057510(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn654590(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn325940(a,b){var c=a*95+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn475772(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn510846(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn645577(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn057406(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn109375(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn984371(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn584767(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn264183(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn350990(a,b){var c=a*56+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn216234(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn735284(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn068012(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn196028(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn140285(a,b){var c=a*62+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn578254(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn614961(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn204240(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn502241(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn294967(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn086836(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn079545(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn656143(a,b){var c=a*76+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn685841(a,b){var c=a*8+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn877539(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn431695(a,b){var c=a*8+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn719254(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn949916(a,b){var c=a*35+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn045721(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn919467(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn881688(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn224212(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn050122(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn138744(a,b){var c=a*7+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn687591(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn222230(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn657258(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn725983(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn932489(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn185867(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn161394(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn338817(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn558879(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn716754(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn403342(a,b){var c=a*18+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn889086(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn732301(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn081214(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn830105(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn869382(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn607104(a,b){var c=a*47+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn184716(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn087762(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn913825(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn439384(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn268994(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn577179(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn341916(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn664515(a,b){var c=a*11+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn197461(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn226413(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn017730(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn121750(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn714866(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn390062(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn489915(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn041005(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn873591(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn859917(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn635581(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn677166(a,b){var c=a*55+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn042663(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn555830(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn452333(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn316401(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn155185(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn305606(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn872170(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn867981(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn349809(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn556758(a,b){var c=a*8+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn040785(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn502415(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn611695(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn574762(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn129918(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn330610(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn390364(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn814439(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn735629(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn753935(a,b){var c=a*95+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn532182(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn400350(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn080739(a,b){var c=a*5+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn086393(a,b){var c=a*58+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn491077(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn243705(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn082604(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn023970(a,b){var c=a*34+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn791860(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn210330(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn852205(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn964576(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn964028(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn434839(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn428502(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn338293(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn794262(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn767664(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn432595(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn309984(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn717749(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn389417(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn811885(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn983568(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn625258(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn036897(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn864305(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn551212(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn759494(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn207980(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn758556(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn368753(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn182812(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn175113(a,b){var c=a*44+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn926595(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn577741(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn566703(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn426089(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn215765(a,b){var c=a*89+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn510585(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn816049(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn877418(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn767215(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn486159(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn944568(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn843112(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn473207(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn288988(a,b){var c=a*44+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn788082(a,b){var c=a*56+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn025434(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn497212(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn711591(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn172821(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn079385(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn943784(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn162014(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn527907(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn107349(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn908210(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn897512(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn256468(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn784171(a,b){var c=a*37+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn168249(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn451309(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn111692(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn584591(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn286338(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn628895(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn897616(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn684458(a,b){var c=a*88+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn629533(a,b){var c=a*84+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn917631(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn542499(a,b){var c=a*63+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn143111(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn