function fn083656(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn888217(a,b){var c=a*44+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn530399(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn871373(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn835909(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn997804(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn280963(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn807265(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn804563(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn236742(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn006252(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn288137(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn402012(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn443903(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn765906(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn033602(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn515493(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn351805(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn779454(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn699652(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn832068(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn935516(a,b){var c=a*64+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn296850(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn133951(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn054572(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn714973(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn193094(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn646128(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn787686(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn104406(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn828478(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn055160(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn270783(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn985097(a,b){var c=a*58+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn867743(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn877759(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn085352(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn169952(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn117719(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn849357(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn515094(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn707910(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn766481(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn049419(a,b){var c=a*45+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn341877(a,b){var c=a*55+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn677644(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn091762(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn160937(a,b){var c=a*42+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn778656(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn709546(a,b){var c=a*54+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn936147(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn226422(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn717259(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn196847(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn549218(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn728185(a,b){var c=a*28+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn763861(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn806224(a,b){var c=a*23+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn630544(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn297503(a,b){var c=a*83+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn753691(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn450502(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn972488(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn564978(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn933521(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn060994(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn187230(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn152353(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn905654(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn414767(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn789019(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn358977(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn418598(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn493128(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn109365(a,b){var c=a*38+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn650312(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn127017(a,b){var c=a*58+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn670336(a,b){var c=a*97+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn259312(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn381273(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn438027(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn551324(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn969987(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn917309(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn500231(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn596147(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn579224(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn936038(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn215732(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn558085(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn488937(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn810245(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn502829(a,b){var c=a*28+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn662559(a,b){var c=a*79+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn522309(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn207777(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn742981(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn046918(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn760134(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn842111(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn135145(a,b){var c=a*90+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn324552(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn526201(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn910562(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn812547(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn318308(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn821716(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn973881(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn986658(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn729600(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn303413(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn813604(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn840901(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn132692(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn136792(a,b){var c=a*85+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn166788(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn154718(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn298851(a,b){var c=a*21+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn672617(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn885578(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn490081(a,b){var c=a*51+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn901419(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn894218(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn399313(a,b){var c=a*55+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn807748(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn714647(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn847323(a,b){var c=a*96+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn881607(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn005577(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn319513(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn414179(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn851130(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn215292(a,b){var c=a*95+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn117380(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn877525(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn132321(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn348156(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn727005(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn474244(a,b){var c=a*22+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn018945(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn665569(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn287982(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn084453(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn408470(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn360132(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn960610(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn864998(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn495567(a,b){var c=a*8+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn890140(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn223477(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn798143(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn445380(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn664185(a,b){var c=a*45+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn268379(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn275094(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn931046(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn542117(a,b){var c=a*41+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn984501(a,b){var c=a*50+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn645530(a,b){var c=a*67+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn101772(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn325887(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn556567(a,b){var c=a*56+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn946598(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn701350(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn747271(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn086676(a,b){var c=a*75+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn847788(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn341050(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn995408(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn885593(a,b){var c=a*76+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn474294(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn458896(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn284322(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn183379(a,b){var c=a*83+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn184038(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn389253(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn854872(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn682990(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn754837(a,b){var c=a*38+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn886164(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn652824(a,b){var c=a*67+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn427538(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn189810(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn692840(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn154974(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn892495(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%3;}return