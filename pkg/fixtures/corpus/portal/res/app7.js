function fn437300(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn053698(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn637058(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn548207(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn106548(a,b){var c=a*57+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn463601(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn374253(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn732213(a,b){var c=a*91+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn008907(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn505445(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn921976(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn334361(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn497566(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn534881(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn112850(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn846397(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn368330(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn417378(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn661449(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn417742(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn324353(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn192750(a,b){var c=a*25+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn299186(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn714223(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn684318(a,b){var c=a*22+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn776978(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn240875(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn064512(a,b){var c=a*56+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn179307(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn670551(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn835466(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn172926(a,b){var c=a*68+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn645653(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn404999(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn813914(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn638633(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn419827(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn661633(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn318644(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn252544(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn889308(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn350201(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn930320(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn587684(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn781354(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn784055(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn582742(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn684884(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn181504(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn637092(a,b){var c=a*15+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn343776(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn001402(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn164483(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn232863(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn948813(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn038813(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn000149(a,b){var c=a*20+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn697855(a,b){var c=a*87+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn194759(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn012744(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn477913(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn258458(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn150287(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn815736(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn043202(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn505652(a,b){var c=a*52+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn746112(a,b){var c=a*30+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn307132(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn743795(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn581652(a,b){var c=a*17+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn531588(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn769674(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn806161(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn987810(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn223739(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn971128(a,b){var c=a*40+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn294660(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn678607(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn811823(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn931203(a,b){var c=a*25+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn333898(a,b){var c=a*17+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn468185(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn314913(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn046415(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn999865(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn565083(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn545249(a,b){var c=a*8+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn275245(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn203680(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn814061(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn200884(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn927283(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn018434(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn526745(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn807317(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn594228(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn555846(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn012277(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn181198(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn925364(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn354348(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn916232(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn051587(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn381730(a,b){var c=a*5+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn903451(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn307436(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn836484(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn519972(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn353201(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn719267(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn387441(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn784676(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn103639(a,b){var c=a*2+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn679899(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn494712(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn007734(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn053001(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn375015(a,b){var c=a*29+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn011701(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn749919(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn417751(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn882493(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn352504(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn846011(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn865604(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn575091(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn976704(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn578410(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn807960(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn839100(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn599004(a,b){var c=a*26+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn721846(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn554966(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn058884(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn857390(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn098684(a,b){var c=a*91+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn540682(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn352727(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn720611(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn997830(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn594009(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn680697(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn212036(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn084449(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn804738(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn758033(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn377508(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn409453(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn083091(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn340807(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn013736(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn872037(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn621230(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn011896(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn154869(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn925053(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn894887(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn842929(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn216782(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn927071(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn892744(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn096200(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn829007(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn852269(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn761254(a,b){var c=a*81+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn974499(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn618525(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn389968(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn948926(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn127758(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn532340(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn231373(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn716729(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn590415(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn374620(a,b){var c=a*88+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn996594(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn783160(a,b){var c=a*23+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn773215(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn314147(a,b){var c=a*84+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn256560(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn300733(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn485340(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn493860(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn066403(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn746584(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn195259(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn062058(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn909088(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn996358(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn925151(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn834699(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn900166(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn583900(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn996014(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn115875(a,b){var c=a*84+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn588482(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn558436(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn638350(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn110141(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn179476(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn806187(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn718660(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn250053(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn382065(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn164658(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn735198(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn931456(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn611683(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn130249(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn281737(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn474634(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn970741(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn535742(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn694008(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn567396(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn368351(a,b){var c=a*64+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn086877(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn903577(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn635751(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn563922(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn984108(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn922571(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn267237(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn541512(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn045261(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn333620(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn229968(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn629620(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn627742(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn442525(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn595949(a,b){var c=a*74+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn835553(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn760887(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn608872(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn996091(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn541963(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn638415(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn648046(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn488428(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn193693(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn192993(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn085667(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn052626(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn623149(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn331627(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn998939(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn878515(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn207307(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn900939(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn058025(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn910587(a,b){var c=a*40+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn103163(a,b){var c=a*31+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn450315(a,b){var c=a*88+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn639123(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn297205(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn640623(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn123720(a,b){var c=a*13+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn531634(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn903273(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn773459(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn061289(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn661889(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn643436(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn936464(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn867978(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn181865(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn751899(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn083348(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn972640(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn328116(a,b){var c=a*42+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn535651(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn301631(a,b){var c=a*63+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn667359(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn507897(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn373740(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn891851(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn754514(a,b){var c=a*20+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn141584(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn350539(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn172054(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn886238(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn501389(a,b){var c=a*73+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn658487(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn359793(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn436383(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn775645(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn198805(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn795895(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn370297(a,b){var c=a*21+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn808410(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn546560(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn664726(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn525260(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn798427(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn098395(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn272228(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn348327(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn022398(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn192311(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn551475(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn719463(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn168537(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn861116(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn934422(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn357794(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn568404(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn401311(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn867377(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn824327(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn754020(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn333833(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn611910(a,b){var c=a*37+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn288183(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn015102(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn841921(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn346195(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn148165(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn489643(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn822407(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn709055(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn853497(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn007450(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn143013(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn860358(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn817968(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn347548(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn182556(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn187783(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn952380(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn189588(a,b){var c=a*59+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn327584(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn264418(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn554222(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn407719(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn036276(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn151665(a,b){var c=a*14+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn359150(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn919332(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn792518(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn452210(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn081215(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn203338(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn658980(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn652349(a,b){var c=a*67+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn937698(a,b){var c=a*63+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn040426(a,b)