function fn942323(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn944697(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn101931(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn861439(a,b){var c=a*18+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn076329(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn760120(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn277058(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn080190(a,b){var c=a*18+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn026268(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn474315(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn835882(a,b){var c=a*88+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn079229(a,b){var c=a*23+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn298040(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn332694(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn886299(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn312235(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn159012(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn512409(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn362187(a,b){var c=a*33+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn414529(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn937773(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn477304(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn548213(a,b){var c=a*28+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn145724(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn682584(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn289857(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn086517(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn082003(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn344436(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn087623(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn023904(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn526427(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn110359(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn600203(a,b){var c=a*12+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn728253(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn014402(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn795182(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn028154(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn565977(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn589937(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn563482(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn680905(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn734136(a,b){var c=a*77+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn060168(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn921210(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn058341(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn179643(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn818381(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn485817(a,b){var c=a*9+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn330833(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn150726(a,b){var c=a*45+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn191002(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn616497(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn736971(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn455229(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn534725(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn959085(a,b){var c=a*72+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn042711(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn654204(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn682056(a,b){var c=a*89+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn889941(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn690431(a,b){var c=a*23+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn701845(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn006853(a,b){var c=a*79+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn238543(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn042682(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn082684(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn140882(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn874151(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn603815(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn877680(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn180548(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn650629(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn333571(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn459849(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn060347(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn157929(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn962690(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn223515(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn198171(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn634548(a,b){var c=a*58+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn695041(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn640881(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn726482(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn521322(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn776830(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn997891(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn663045(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn823361(a,b){var c=a*79+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn701279(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn891209(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn414952(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn018301(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn829590(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn162822(a,b){var c=a*24+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn879844(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn103455(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn165155(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn946914(a,b){var c=a*23+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn402884(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn464969(a,b){var c=a*56+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn672391(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn610717(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn461683(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn047448(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn692806(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn739280(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn042813(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn789809(a,b){var c=a*76+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn933611(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn229750(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn535752(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn702896(a,b){var c=a*14+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn285492(a,b){var c=a*29+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn898037(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn399124(a,b){var c=a*91+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn285756(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn285359(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn090063(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn587149(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn617569(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn278631(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn174239(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn485074(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn080064(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn257590(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn959335(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn835315(a,b){var c=a*79+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn200387(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn346695(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn532682(a,b){var c=a*81+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn270428(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn259235(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn854614(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn323653(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn779949(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn289306(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn755543(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn580939(a,b){var c=a*63+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn542736(a,b){var c=a*94+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn485332(a,b){var c=a*26+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn061823(a,b){var c=a*97+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn840779(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn362857(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn266384(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn882371(a,b){var c=a*67+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn524491(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn526467(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn192170(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn016852(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn032604(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn081302(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn104312(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn312165(a,b){var c=a*70+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn429217(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn024166(a,b){var c=a*40+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn521289(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn937917(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn013066(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn657297(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn254497(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn161492(a,b){var c=a*85+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn482220(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn801809(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn913344(a,b){var c=a*19+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn241316(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn731750(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn842432(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn780411(a,b){var c=a*20+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn057200(a,b){var c=a*30+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn933150(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn774320(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn440544(a,b){var c=a*79+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn629977(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn551229(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn598995(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn899769(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn813647(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn290635(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn852452(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn660714(a,b){var c=a*14+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn855324(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn478943(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn276640(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn338324(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn516044(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn528811(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn252782(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn649833(a,b){var c=a*29+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn507050(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn553645(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn154440(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn152971(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn750926(a,b){var c=a*94+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn957431(a,b){var c=a*48+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn678556(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn814156(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn211408(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn923272(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn970867(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn137222(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn660050(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn470144(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn173464(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn380569(a,b){var c=a*50+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn222150(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn359827(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn383085(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn498646(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn983260(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn535423(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn888345(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn429612(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn176673(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn557781(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn681960(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn326819(a,b){var c=a*29+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn173745(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn564650(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn975340(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn843111(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn733110(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn410812(a,b){var c=a*94+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn526486(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn259091(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn165836(a,b){var c=a*45+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn445109(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn198314(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn596213(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn940934(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn284595(a,b){var c=a*6+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn709184(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn803811(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn202852(a,b){var c=a*54+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn076018(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn573515(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn604543(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn957085(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn303015(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn257964(a,b){var c=a*76+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn802692(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn111485(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn207418(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn605748(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn213238(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn797655(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn778926(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn137539(a,b){var c=a*97+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn800502(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn586286(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn406687(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn114834(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn545138(a,b){var c=a*55