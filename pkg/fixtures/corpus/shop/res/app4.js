function fn694244(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn691144(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn096523(a,b){var c=a*47+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn725508(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn769351(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn814500(a,b){var c=a*14+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn786230(a,b){var c=a*25+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn248854(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn296523(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn497698(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn413586(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn540870(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn147911(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn488299(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn234292(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn795690(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn492166(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn423858(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn688591(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn331013(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn432954(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn883242(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn488308(a,b){var c=a*85+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn221541(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn075873(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn222491(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn440473(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn798131(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn762322(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn240923(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn190342(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn159622(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn363190(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn387568(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn796995(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn224106(a,b){var c=a*3+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn216486(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn930880(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn754390(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn101123(a,b){var c=a*72+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn680049(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn269376(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn926056(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn825129(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn311090(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn438546(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn524607(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn505766(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn978643(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn465238(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn700295(a,b){var c=a*33+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn906384(a,b){var c=a*5+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn309997(a,b){var c=a*38+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn426244(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn176736(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn944136(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn623257(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn580266(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn857050(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn837899(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn329879(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn919061(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn407666(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn966826(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn750487(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn445210(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn863484(a,b){var c=a*93+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn979743(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn645903(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn155633(a,b){var c=a*51+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn761119(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn723022(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn264521(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn906792(a,b){var c=a*36+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn178814(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn559808(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn591615(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn678840(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn497513(a,b){var c=a*87+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn024028(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn595549(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn471362(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn412555(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn612448(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn057556(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn570747(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn095325(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn879561(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn179587(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn766464(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn088684(a,b){var c=a*74+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn169791(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn822374(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn125715(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn575061(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn776756(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn470555(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn359223(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn411284(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn088845(a,b){var c=a*43+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn476369(a,b){var c=a*88+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn952815(a,b){var c=a*11+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn091138(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn232233(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn602318(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn500345(a,b){var c=a*25+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn514292(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn636029(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn813124(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn257252(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn367249(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn253507(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn167137(a,b){var c=a*57+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn499733(a,b){var c=a*66+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn654979(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn594933(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn798387(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn052495(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn344284(a,b){var c=a*13+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn471729(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn712272(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn427104(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn403983(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn898420(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn734812(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn346392(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn438291(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn585572(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn004390(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn910845(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn800221(a,b){var c=a*12+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn503029(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn258310(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn044840(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn329553(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn561167(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn073031(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn368636(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn873382(a,b){var c=a*11+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn241084(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn090942(a,b){var c=a*97+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn986055(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn730997(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn116349(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn709385(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn977205(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn755974(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn994759(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn378605(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn074056(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn737928(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn676349(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn588403(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn069476(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn036381(a,b){var c=a*86+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn120725(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn304831(a,b){var c=a*79+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn111512(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn391980(a,b){var c=a*12+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn839028(a,b){var c=a*26+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn272901(a,b){var c=a*87+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn651368(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn124657(a,b){var c=a*65+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn114646(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn952168(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn809920(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn753326(a,b){var c=a*71+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn971808(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn677681(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn746014(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn160930(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn117928(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn738067(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn870575(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn024536(a,b){var c=a*96+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn723112(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn616144(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn567301(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn718500(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn922413(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn087707(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn046835(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn925751(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn623025(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn477689(a,b){var c=a*29+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn326817(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn265535(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn481099(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn283659(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn210504(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn495162(a,b){var c=a*79+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn183509(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn311926(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn945105(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn320424(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn746421(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn155397(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn268483(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn602181(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn371213(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn401806(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn171631(a,b){var c=a*57+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn832233(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn769039(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn095962(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn350950(a,b){var c=a*96+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn245831(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn735648(a,b){var c=a*91+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn680732(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn944704(a,b){var c=a*56+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn049970(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn191176(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn384348(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn992941(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn525901(a,b){var c=a*26+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn757392(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn325575(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn214923(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn233542(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn357734(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn616307(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn903689(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn029733(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn766559(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn030177(a,b){var c=a*70+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn739363(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn360023(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn943277(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn483662(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn365993(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn905293(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn971211(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn354995(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn748509(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn949787(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn257514(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn365377(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn604412(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn757591(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn847248(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn754148(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn161261(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn485324(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn887084(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn780880(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn774273(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn808301(a,b){var c=a*94+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn349157(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn412296(a,b){var c=a*65+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn375986(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn058369(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn202898(a,b){var c=a*10+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn963075(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn554295(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn231999(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn434144(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn429017(a,b){var c=a*71+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn294040(a,b){var c=a*60+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn589785(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn742963(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn986453(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn962837(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn262262(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn309583(a,b){var c=a*25+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn594836(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn060015(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn000507(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn487429(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn368004(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn012960(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn870458(a,b){var c=a*86+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn695958(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn240644(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn930884(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn357826(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn916680(a,b){var c=a*91+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn870339(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn062759(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn539742(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn542657(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn127669(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn612329(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn170761(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn325733(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn602543(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn783426(a,b){var c=a*69+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn609943(a,b){var c=a*35+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn449109(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn119944(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn066027(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn758035(a,b){var c=a*96+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn020936(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn778381(a,b){var c=a*50+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn668111(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn341556(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn691233(a,b){var c=a*3+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn385649(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn988451(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn819229(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn206497(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn081785(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn156061(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn628926(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn578607(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn480630(a,b){var c=a*8+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn281406(a,b){var c=a*69+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn945146(a,b){var c=a*33+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn930017(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn563604(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn933138(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn871837(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn795540(a,b){var c=a*25+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn944880(a,b){var c=a*6+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn460185(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn806419(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn683297(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn199630(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn610253(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn186144(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn983610(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn979965(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn179296(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn009429(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn433619(a,b){var c=a*12+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn098938(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn930832(a,b){var c=a*64+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn068387(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn228531(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn051977(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn659717(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn561085(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn009642(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn849113(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn865843(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn897523(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn006372(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn081945(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn679392(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn040627(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn891633(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn438200(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn937957(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn252611(a,b){var c=a*3+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn031530(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn629123(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn702500(a,b){var c=a*73+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn614025(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn950809(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn148887(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn416864(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn359870(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn929450(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn073554(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn031618(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn741103(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn602488(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn461253(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn268933(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn238804(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn576452(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn290117(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn984956(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn223475(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn595709(a,b){var c=a*52+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn075063(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn910160(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn772674(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn468134(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn865827(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn057741(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn914813(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn621920(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn072281(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn487113(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn962714(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn771583(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn546971(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn889089(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn300329(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn973455(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn480690(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn542016(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn063007(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn684554(a,b){var c=a*15+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn537334(a,b){var c=a*35+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn997111(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn560339(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn573738(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn110113(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn391273(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn924653(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn196088(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn059520(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn421372(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn041891(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn974199(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn049155(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn435954(a,b){var c=a*79+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn428950(a,b){var c=a*39+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn769892(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn392719(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn615406(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn781153(a,b){var c=a*55+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn158222(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn610968(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn962029(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn579652(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn232189(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn249194(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn657149(a,b){var c=a*62+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn646589(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn840071(a,b){var c=a*55+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn891819(a,b){var c=a*34+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn443879(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn971093(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn503273(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn777748(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn593383(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn828566(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn715866(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn496878(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn820037(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn456512(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn392609(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn258072(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn102395(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn659963(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn694787(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn848182(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn952988(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn564405(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn775327(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn124694(a,b){var c=a*72+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn654177(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn279819(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn299747(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn286829(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn858554(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn545663(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn451261(a,b){var c=a*21+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn088161(a,b){var c=a*66+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn690070(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn249984(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn018816(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn510614(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn749521(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn081489(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn108598(a,b){var c=a*77+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn033332(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn699790(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn950962(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn699828(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn495390(a,b){var c=a*82+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn527628(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn600649(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn766617(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn468691(a,b){var c=a*3+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn922227(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn898846(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn001994(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn777513(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn174345(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn615640(a,b){var c=a*50+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn911318(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn778252(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn680382(a,b){var c=a*82+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn170022(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn886915(a,b){var c=a*39+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn891252(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn188503(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn905029(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn445643(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn675154(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn853565(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn506281(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn569182(a,b){var c=a*69+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn796192(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn801088(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn943910(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn541060(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn141320(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn853996(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn080602(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn837206(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn908382(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn171711(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn007644(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn390913(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn902120(a,b){var c=a*15+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn929859(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn520200(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn948240(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn593668(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn554649(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn611277(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn805498(a,b){var c=a*25+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn008978(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn472742(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn387487(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn042745(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn039685(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn272280(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn052403(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn627022(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn236107(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn721523(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn010251(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn734629(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn089052(a,b){var c=a*39+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn702075(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn695144(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn864547(a,b){var c=a*29+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn670484(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn148167(a,b){var c=a*2+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn124773(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn834218(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn922485(a,b){var c=a*71+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn468595(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn729897(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn868089(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn519277(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn384128(a,b){var c=a*83+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn701225(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn856137(a,b){var c=a*49+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn845729(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn315038(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn272656(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn047645(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn223737(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn934844(a,b){var c=a*6+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn592888(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn189696(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%9;}