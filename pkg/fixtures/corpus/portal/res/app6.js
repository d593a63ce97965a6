function fn907528(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn660649(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn125901(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn339778(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn494676(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn946314(a,b){var c=a*94+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn360429(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn868347(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn006321(a,b){var c=a*34+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn026847(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn252422(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn168473(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn610206(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn326066(a,b){var c=a*2+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn625811(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn054709(a,b){var c=a*93+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn884035(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn273486(a,b){var c=a*42+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn405416(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn686889(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn269315(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn548275(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn084751(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn340611(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn571813(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn748193(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn921180(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn771224(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn828615(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn690473(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn356589(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn716648(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn313373(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn748760(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn052072(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn494632(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn051878(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn195776(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn817982(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn946995(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn700800(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn262884(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn233520(a,b){var c=a*79+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn186852(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn251249(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn968816(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn645556(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn649580(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn503334(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn983504(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn392682(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn854853(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn767221(a,b){var c=a*93+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn830816(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn088300(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn084187(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn913939(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn144674(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn008741(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn060694(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn963543(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn490911(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn211313(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn975843(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn882752(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn627617(a,b){var c=a*55+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn720237(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn536257(a,b){var c=a*41+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn863175(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn430142(a,b){var c=a*35+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn075464(a,b){var c=a*43+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn995959(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn953022(a,b){var c=a*40+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn804216(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn429983(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn826526(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn046113(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn408059(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn071970(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn479491(a,b){var c=a*24+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn108515(a,b){var c=a*77+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn600214(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn551670(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn457753(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn520290(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn943889(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn676580(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn538291(a,b){var c=a*29+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn783548(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn438190(a,b){var c=a*81+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn396799(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn375758(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn386406(a,b){var c=a*20+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn166761(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn732864(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn948430(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn860280(a,b){var c=a*44+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn468897(a,b){var c=a*28+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn495353(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn073967(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn294176(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn276509(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn369429(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn112375(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn317397(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn662065(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn441942(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn996547(a,b){var c=a*22+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn128766(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn073511(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn771384(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn165096(a,b){var c=a*29+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn755304(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn228519(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn713383(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn098456(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn169995(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn725398(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn248058(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn773337(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn273267(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn937488(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn570182(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn092857(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn772704(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn257138(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn864433(a,b){var c=a*14+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn617393(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn040883(a,b){var c=a*54+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn593853(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn612131(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn530364(a,b){var c=a*34+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn369456(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn754672(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn539268(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn193743(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn795488(a,b){var c=a*21+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn893849(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn113867(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn432035(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn432426(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn202283(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn971410(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn368761(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn042975(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn516091(a,b){var c=a*30+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn898026(a,b){var c=a*55+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn653455(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn440230(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn918517(a,b){var c=a*75+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn056370(a,b){var c=a*62+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn087733(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn124825(a,b){var c=a*79+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn199951(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn612185(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn434625(a,b){var c=a*94+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn737592(a,b){var c=a*44+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn303655(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn934248(a,b){var c=a*56+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn493817(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn363032(a,b){var c=a*74+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn022930(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn082282(a,b){var c=a*41+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn224044(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn373228(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn378370(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn608524(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn459306(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn486988(a,b){var c=a*89+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn403560(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn408033(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn989059(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn064863(a,b){var c=a*89+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn546774(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn666751(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn500311(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn418416(a,b){var c=a*48+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn338331(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn590776(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn428885(a,b){var c=a*78+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn553870(a,b){var c=a*27+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn953288(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn054626(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn985317(a,b){var c=a*34+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn656838(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn311913(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn673008(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn658536(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn969853(a,b){var c=a*8+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn734409(a,b){var c=a*92+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn203771(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn549710(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn063870(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn585486(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn667544(a,b){var c=a*21+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn781862(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn288170(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn118583(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn200611(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn902023(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn577398(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn423020(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn243944(a,b){var c=a*93+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn504728(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn093739(a,b){var c=a*4+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn684479(a,b){var c=a*31+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn445321(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn533131(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn508485(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn995823(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn245513(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn852249(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn503719(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn461197(a,b){var c=a*44+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn282731(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn163793(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn558217(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn944959(a,b){var c=a*67+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn823887(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn646145(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn836770(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn820158(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn911978(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn469544(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn780883(a,b){var c=a*33+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn123335(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn304265(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn753822(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn289953(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn290554(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn155871(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn726508(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn223765(a,b){var c=a*57+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn483910(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn094123(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn365371(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn278879(a,b){var c=a*67+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn097130(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn564618(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn529429(a,b){var c=a*88+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn605060(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn254097(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn947673(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn471384(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn191374(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn690904(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn960780(a,b){var c=a*45+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn527083(a,b){var c=a*74+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn533182(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn109651(a,b){var c=a*84+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn624815(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn992752(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn465907(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn967672(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn429543(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn462099(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn146168(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn116080(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn948601(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn657586(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn174543(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn293783(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn255623(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn262209(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn092648(a,b){var c=a*7+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn827779(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn312385(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn081099(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn141578(a,b){var c=a*4+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn884428(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn832984(a,b){var c=a*7+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn051683(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn368750(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn747014(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn131106(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn712758(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn445281(a,b){var c=a*35+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn116292(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn229766(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn621558(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn414189(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn613038(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn920490(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn110655(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn890265(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn318604(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn916431(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn916983(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn790334(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn913348(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn705393(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn704890(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn878957(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn733434(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn035374(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn929260(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn148160(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn603737(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn918840(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn233621(a,b){var c=a*58+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn721104(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn490020(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn303379(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn111300(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn358396(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn095436(a,b){var c=a*62+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn719386(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn138476(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn155728(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn409432(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn121945(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn303269(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn825861(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn656606(a,b){var c=a*4+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn907161(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn563537(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn275517(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn376374(a,b){var c=a*30+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn923379(a,b){var c=a*37+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn817807(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn798113(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn616986(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn000323(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn966528(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn829021(a,b){var c=a*48+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn200911(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn500104(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn029420(a,b){var c=a*95+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn397018(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn857749(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn223493(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn422366(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn815621(a,b){var c=a*33+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn904650(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn102335(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn237035(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn817410(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn129438(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn498383(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn702695(a,b){var c=a*63+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn713852(a,b){var c=a*79+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn678076(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn561514(a,b){var c=a*7+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn698097(a,b){var c=a*10+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn757227(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn880338(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn258640(a,b){var c=a*22+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn800913(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn593354(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn283710(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn510512(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn700672(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn619762(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn696188(a,b){var c=a*30+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn978271(a,b){var c=a*22+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn452960(a,b){var c=a*14+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn567758(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn450011(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn145958(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn987394(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn035069(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn152102(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn164080(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn855778(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn347069(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn394186(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn571903(a,b){var c=a*6+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn310116(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn162156(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn228291(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn499717(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn366702(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn917875(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn057973(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn945561(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn631275(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn978919(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn947150(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn798525(a,b){var c=a*20+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn318258(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn372663(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn474137(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn275664(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn533319(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn901835(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn114040(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn788304(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn746316(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn973896(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn129531(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn015534(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn327081(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn847957(a,b){var c=a*33+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn946360(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn007057(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn711402(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn496100(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn453217(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn317316(a,b){var c=a*75+b;for(var i=0;i<37;i++){c