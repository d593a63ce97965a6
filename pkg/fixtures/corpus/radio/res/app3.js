function fn326528(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn977980(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn905795(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn044120(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn530288(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn275237(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn210030(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn186260(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn624366(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn341054(a,b){var c=a*16+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn737184(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn590025(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn043727(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn060380(a,b){var c=a*48+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn987284(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn962336(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn377200(a,b){var c=a*20+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn544530(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn752788(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn035633(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn828686(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn335780(a,b){var c=a*92+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn607091(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn041434(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn291102(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn419882(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn403895(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn252410(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn234351(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn824952(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn075962(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn641850(a,b){var c=a*64+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn029609(a,b){var c=a*6+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn513634(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn381493(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn097154(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn283930(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn122194(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn998772(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn907643(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn161249(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn965510(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn711752(a,b){var c=a*5+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn393415(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn269166(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn203321(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn969772(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn566358(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn208825(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn172898(a,b){var c=a*54+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn187911(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn731322(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn373839(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn165906(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn506917(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn635179(a,b){var c=a*64+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn218296(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn078409(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn574684(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn344393(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn443856(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn034032(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn812849(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn615195(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn283386(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn561307(a,b){var c=a*21+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn306433(a,b){var c=a*65+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn775114(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn540785(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn625819(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn669468(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn880239(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn578423(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn662621(a,b){var c=a*97+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn688317(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn993138(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn500606(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn835481(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn523465(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn432002(a,b){var c=a*16+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn021339(a,b){var c=a*39+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn122383(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn324650(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn852399(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn385769(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn597568(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn496272(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn674194(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn662480(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn625442(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn241892(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn422357(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn048726(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn537098(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn474322(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn151072(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn494641(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn020163(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn937489(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn552010(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn414948(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn960740(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn409068(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn575403(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn288279(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn366378(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn402676(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn679159(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn252208(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn976128(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn845417(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn931094(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn841336(a,b){var c=a*63+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn600259(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn422826(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn644272(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn144272(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn880681(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn936156(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn921596(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn061850(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn046509(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn562617(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn921611(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn820675(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn520269(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn132135(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn732558(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn679870(a,b){var c=a*97+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn283249(a,b){var c=a*9+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn650656(a,b){var c=a*89+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn458893(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn316780(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn983287(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn514919(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn748340(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn112503(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn813358(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn315468(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn690196(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn599836(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn134430(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn446154(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn412049(a,b){var c=a*43+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn837522(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn347864(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn789527(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn320641(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn089132(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn527392(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn704386(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn583035(a,b){var c=a*81+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn073595(a,b){var c=a*58+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn820385(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn412466(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn040835(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn849945(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn911136(a,b){var c=a*84+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn912631(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn356268(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn465848(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn090359(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn231137(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn925047(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn896019(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn064784(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn428377(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn956918(a,b){var c=a*76+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn247826(a,b){var c=a*65+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn445480(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn289250(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn884766(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn350155(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn540581(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn045614(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn229931(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn743449(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn704967(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn500854(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn147793(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn185342(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn552358(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn745277(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn845996(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn684462(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn246610(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%12;}return c;}