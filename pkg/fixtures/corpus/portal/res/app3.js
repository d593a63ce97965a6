function fn347338(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn553211(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn818160(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn567800(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn771831(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn289476(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn070943(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn389736(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn557336(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn396182(a,b){var c=a*62+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn266416(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn242771(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn506319(a,b){var c=a*45+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn871662(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn789872(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn083060(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn434027(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn598610(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn601325(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn602135(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn232086(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn109349(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn550735(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn196699(a,b){var c=a*84+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn756553(a,b){var c=a*88+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn402048(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn243509(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn233440(a,b){var c=a*75+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn607452(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn759063(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn618242(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn656254(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn309668(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn955209(a,b){var c=a*80+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn363167(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn060468(a,b){var c=a*56+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn198306(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn965328(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn995409(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn347452(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn784238(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn794012(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn034331(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn519058(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn835450(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn977864(a,b){var c=a*90+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn402688(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn405393(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn815017(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn660392(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn253047(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn426294(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn724967(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn989969(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn431043(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn386797(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn685480(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn887253(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn132117(a,b){var c=a*3+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn237177(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn692050(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn698877(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn472236(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn330382(a,b){var c=a*29+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn393750(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn717784(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn546132(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn078251(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn216009(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn180951(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn526468(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn525561(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn295720(a,b){var c=a*37+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn992775(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn206330(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn453152(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn021404(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn775277(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn958595(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn771663(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn803448(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn045862(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn614556(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn061930(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn381479(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn470561(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn912944(a,b){var c=a*42+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn895397(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn848305(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn816800(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn960188(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn266605(a,b){var c=a*37+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn305835(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn411400(a,b){var c=a*25+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn341301(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn763105(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn352077(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn054886(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn566617(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn628373(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn684298(a,b){var c=a*42+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn224544(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn871720(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn090212(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn045482(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn766310(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn200328(a,b){var c=a*97+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn251280(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn886241(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn563846(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn038768(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn424172(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn938984(a,b){var c=a*31+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn745085(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn830039(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn018228(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn977603(a,b){var c=a*63+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn815156(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn692330(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn869098(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn484143(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn493661(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn040648(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn649167(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn663585(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn289740(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn410283(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn270539(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn896020(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn929243(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn683412(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn843477(a,b){var c=a*20+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn268952(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn042421(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn905890(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn085509(a,b){var c=a*46+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn031912(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn397850(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn537170(a,b){var c=a*72+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn262564(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn069678(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn712744(a,b){var c=a*95+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn220624(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn069936(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn010147(a,b){var c=a*92+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn599994(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn088027(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn149331(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn501189(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn533624(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn870741(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn823345(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn486752(a,b){var c=a*10+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn879151(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn912909(a,b){var c=a*44+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn455499(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn071441(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn354295(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn340347(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn950051(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn757900(a,b){var c=a*62+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn690430(a,b){var c=a*17+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn706965(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn520973(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn295087(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn826827(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn128651(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn790239(a,b){var c=a*3+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn460882(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn085608(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn221276(a,b){var c=a*31+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn620081(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn023623(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn256983(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn312857(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn464478(a,b){var c=a*78+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn804863(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn884579(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn042085(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn661299(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn773263(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn160280(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn581509(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn415466(a,b){var c=a*56+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn618362(a,b){var c=a*47+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn286322(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn005084(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn970928(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn846065(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn683469(a,b){var c=a*79+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn453154(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn548131(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn734275(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn024790(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn691649(a,b){var c=a*15+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn227531(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn681976(a,b){var c=a*47+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn093529(a,b){var c=a*20+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn084897(a,b){var c=a*76+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn778654(a,b){var c=a*45+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn930196(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn576510(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn047724(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn616282(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn851985(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn248512(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn828743(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn981643(a,b){var c=a*55+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn604538(a,b){var c=a*56+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn250435(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn054845(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn811388(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn530222(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn287774(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn200935(a,b){var c=a*16+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn617796(a,b){var c=a*83+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn310211(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn150923(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn308913(a,b){var c=a*4+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn146094(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn953327(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn456674(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn033248(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn370861(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn521778(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn687499(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn065117(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn677817(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn321698(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn264662(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn648164(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn283161(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn710030(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn160515(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn470908(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn446686(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn603751(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn096513(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn668141(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn441795(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn186625(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn020808(a,b){var c=a*71+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn696580(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn191310(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn110932(a,b){var c=a*9+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn062923(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn992768(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn267223(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn724049(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn595704(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn316482(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn098950(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn601028(a,b){var c=a*2+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn557418(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn088744(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn608131(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn350036(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn599494(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn229695(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn138497(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn781084(a,b){var c=a*89+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn975354(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn593340(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn452764(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn312411(a,b){var c=a*29+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn155889(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn198177(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn959036(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn267001(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn473841(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn704266(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn916348(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn776832(a,b){var c=a*24+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn696459(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn552803(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn174806(a,b){var c=a*37+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn218347(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn916232(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn521315(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn038559(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn288997(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn901622(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn476538(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn082965(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn868037(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn060242(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn411756(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn022651(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn204809(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn385657(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn739775(a,b){var c=a*38+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn564628(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn110413(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn759056(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn412294(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn896109(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn960440(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn893466(a,b){var c=a*73+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn187513(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn589325(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn052875(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn031901(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn684999(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn611643(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn567481(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn438918(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn462624(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn302834(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn816307(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn301111(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn270452(a,b){var c=a*6+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn977754(a,b){var c=a*39+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn367442(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn796150(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn098442(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn590350(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn423861(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn309165(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn057357(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn422549(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn800550(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn121404(a,b){var c=a*87+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn390925(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn495889(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn834247(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn608123(a,b){var c=a*88+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn911500(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn518119(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn292180(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn403819(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn893896(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn505114(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn409534(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn872810(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn883199(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn567257(a,b){var c=a*36+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn418011(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn793399(a,b){var c=a*78+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn139880(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn001474(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn164621(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn007046(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn960874(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn581679(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn316163(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn012177(a,b){var c=a*24+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn830575(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn292622(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn893877(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn005273(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn664246(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn727174(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn426424(a,b){var c=a*75+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn700527(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn741679(a,b){var c=a*93+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn914585(a,b){var c=a*19+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn097728(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn115392(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn311201(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn176014(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn115279(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn499897(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn888245(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn249201(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn838708(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn462373(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn707651(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn175856(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn842617(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn525509(a,b){var c=a*90+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn255821(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn240841(a,b){var c=a*36+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn369329(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn069072(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn354828(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn603713(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn341459(a,b){var c=a*28+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn320672(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn658671(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn152784(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn420609(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn655165(a,b){var c=a*59+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn601585(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn090787(a,b){var c=a*65+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn313559(a,b){var c=a*8+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn932430(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn035780(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn732756(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn960130(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn593128(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn774720(a,b){var c=a*77+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn573091(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn147375(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn054418(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn482482(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn735272(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn803691(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn367042(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn735483(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn237983(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn747244(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn192493(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn604773(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn862544(a,b){var c=a*94+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn670218(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn568758(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn520797(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn313508(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn807623(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn307422(a,b){var c=a*83+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn551330(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn047272(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn324718(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn854095(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn669124(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn652522(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn575355(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn635121(a,b){var c=a*57+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn610931(a,b){var c=a*92+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn529202(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn462552(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn174540(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn711640(a,b){var c=a*19+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn450989(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn006238(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn147531(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn545435(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn707922(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn712088(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn933027(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn635517(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn737819(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn197311(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn494417(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn854939(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn222613(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn987566(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn818749(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn726663(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn321022(a,b){var c=a*87+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn815366(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn572854(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn069831(a,b){var c=a*2+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn093364(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn533637(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn570888(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn076429(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn767555(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn536432(a,b){var c=a*89+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn338822(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn241345(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn023067(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn497760(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn548150(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn021304(a,b){var c=a*3+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn634173(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn312620(a,b){var c=a*46+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn951468(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn542724(a,b){var c=a*18+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn338465(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn437529(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn785004(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn721762(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn740830(a,b){var c=a*43+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn271535(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn938616(a,b){var c=a*48+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn857900(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn620357(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn217821(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn266300(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn772188(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn757240(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn392527(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn421165(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn531542(a,b){var c=a*96+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn446105(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn275185(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn498211(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn099825(a,b){var c=a*37+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn542430(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn867660(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn647537(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn658889(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn107323(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn740084(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn595388(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn041445(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn195386(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn706707(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn189343(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn169482(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn131122(a,b){var c=a*21+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn373766(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn524697(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn485620(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn523436(a,b){var c=a*11+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn400239(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn339059(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn023641(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn418658(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn283515(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn009964(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn763070(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn829394(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn385095(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn837997(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn750004(a,b){var c=a*94+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn315245(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn798276(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn883827(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn412597(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn597321(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn043291(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn221349(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn583489(a,b){var c=a*25+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn763100(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn000808(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn278069(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn151731(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn495693(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn231855(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn916547(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn343788(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn483652(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn706102(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn114588(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn052057(a,b){var c=a*19+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn392714(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn205986(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn990554(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn811889(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn821683(a,b){var c=a*75+b;fo