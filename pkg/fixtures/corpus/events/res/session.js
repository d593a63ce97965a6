function fn683233(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn981245(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn329112(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn610900(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn533592(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn128421(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn905650(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn137157(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn618051(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn941991(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn579560(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn019565(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn469896(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn864224(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn536943(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn338596(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn363255(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn385301(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn059862(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn151169(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn527268(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn029571(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn944940(a,b){var c=a*28+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn572367(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn183991(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn267817(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn844466(a,b){var c=a*7+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn783255(a,b){var c=a*5+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn869180(a,b){var c=a*47+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn819331(a,b){var c=a*92+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn797265(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn321346(a,b){var c=a*81+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn036392(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn969273(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn050817(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn989093(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn819870(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn042318(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn234871(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn929011(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn610061(a,b){var c=a*70+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn397927(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn835839(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn931021(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn885834(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn172376(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn405303(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn993089(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn837278(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn598055(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn137558(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn604378(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn444981(a,b){var c=a*56+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn984082(a,b){var c=a*37+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn879838(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn352515(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn206667(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn848802(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn349866(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn455284(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn162099(a,b){var c=a*84+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn292392(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn076365(a,b){var c=a*4+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn264826(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn448172(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn027147(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn220030(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn501174(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn594578(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn343930(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn004036(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn522266(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn893293(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn257071(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn513017(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn932290(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn176012(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn894522(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn942714(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn663271(a,b){var c=a*48+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn322872(a,b){var c=a*70+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn856420(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn320330(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn608844(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn063474(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn712065(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn001866(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn349967(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn500936(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn676301(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn414427(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn289990(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn126774(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn828714(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn356965(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn686782(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn740673(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn639297(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn882767(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn807414(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn975573(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn711060(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn487647(a,b){var c=a*47+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn358625(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn257413(a,b){var c=a*75+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn905071(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn960808(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn272500(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn607290(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn270771(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn662006(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn160418(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn875432(a,b){var c=a*86+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn635312(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn534705(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn201093(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn855419(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn400376(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn372024(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn119346(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn057342(a,b){var c=a*45+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn608708(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn550958(a,b){var c=a*12+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn240900(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn498097(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn749883(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn100069(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn317140(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn588404(a,b){var c=a*29+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn694473(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn822334(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn776882(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn905260(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn660353(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn839319(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn330223(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn077264(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn286159(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn642921(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn312807(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn486937(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn592122(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn991729(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn507769(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn318474(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn629239(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn354940(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn514100(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn821380(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn100708(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn583297(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn094307(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn037572(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn455920(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn235123(a,b){var c=a*85+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn363408(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn235179(a,b){var c=a*53+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn744119(a,b){var c=a*24+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn531509(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn385225(a,b){var c=a*76+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn454994(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn393307(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn647223(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn322859(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn190269(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn944427(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn225006(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn583345(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn302162(a,b){var c=a*84+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn298937(a,b){var c=a*32+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn745028(a,b){var c=a*46+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn902144(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn058183(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn306752(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn091677(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn218673(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn465529(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn864765(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn522828(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn729494(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn851777(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn390270(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn043308(a,b){var c=a*15+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn180269(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn837783(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn362531(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn335963(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn646173(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn206813(a,b){var c=a*38+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn377338(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn334556(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn103336(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn120280(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn539290(a,b){var c=a*56+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn620929(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn565837(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn061843(a,b){var c=a*37+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn572640(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn967608(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn354634(a,b){var c=a*72+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn474524(a,b){var c=a*95+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn704063(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn765682(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn297206(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn433583(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn102527(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn989940(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn541981(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn022936(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn486114(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn792099(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn732876(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn225207(a,b){var c=a*7+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn107231(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn491069(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn253686(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn040510(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn282567(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn725808(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn728472(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn746612(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn541858(a,b){var c=a*6+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn899737(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn272776(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn971403(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn321022(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn617888(a,b){var c=a*63+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn391271(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn656260(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn666109(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn205011(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn967117(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn537969(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn108559(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn155312(a,b){var c=a*35+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn131170(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn481414(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn222479(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn262966(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn339460(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn994125(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn495118(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn276497(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn115846(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn192877(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn906384(a,b){var c=a*39+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn354220(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn862630(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn984848(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn744683(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn415736(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn621349(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn799326(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn239906(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn491644(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn473776(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn168884(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn730662(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn255638(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn228539(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn731496(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn353301(a,b){var c=a*5+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn861595(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn643393(a,b){var c=a*79+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn091066(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn279015(a,b){var c=a*45+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn689812(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn579765(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn836523(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn671226(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn904281(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn971537(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn420660(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn276864(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn179209(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn645376(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn715209(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn182775(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn470192(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn641546(a,b){var c=a*60+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn721172(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn122584(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn872927(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn015359(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn243461(a,b){var c=a*5+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn017647(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn109425(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn222556(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn895012(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn294649(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn419470(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn570714(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn750431(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn517570(a,b){var c=a*16+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn566142(a,b){var c=a*47+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn047103(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn947859(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn004367(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn447696(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn441432(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn752782(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn132710(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn310382(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn959420(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn322697(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn221570(a,b){var c=a*18+b;for(v