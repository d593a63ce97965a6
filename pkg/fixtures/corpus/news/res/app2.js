function fn459665(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn191411(a,b){var c=a*88+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn075528(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn105307(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn077470(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn847307(a,b){var c=a*77+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn217112(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn183834(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn136181(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn192150(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn761375(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn048849(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn410275(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn135450(a,b){var c=a*15+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn607038(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn161123(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn783821(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn094331(a,b){var c=a*69+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn736874(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn292432(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn946181(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn692852(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn879123(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn128062(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn713455(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn561444(a,b){var c=a*75+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn893967(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn651752(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn812441(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn987145(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn763252(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn860622(a,b){var c=a*93+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn016286(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn341011(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn895081(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn513711(a,b){var c=a*24+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn143856(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn693041(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn255445(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn656640(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn485086(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn846018(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn937952(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn279571(a,b){var c=a*46+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn824124(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn644052(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn342235(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn230464(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn581780(a,b){var c=a*94+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn645430(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn924771(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn492238(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn686881(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn045793(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn594473(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn801240(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn643338(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn721909(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn958144(a,b){var c=a*17+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn121431(a,b){var c=a*45+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn854181(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn498170(a,b){var c=a*49+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn399096(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn236955(a,b){var c=a*66+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn897828(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn443389(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn593265(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn348627(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn410438(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn654537(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn975185(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn236891(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn810028(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn783948(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn199052(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn604624(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn220134(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn804927(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn446501(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn834123(a,b){var c=a*6+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn259361(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn964710(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn189807(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn602755(a,b){var c=a*38+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn003673(a,b){var c=a*89+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn322106(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn780995(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn402919(a,b){var c=a*39+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn602956(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn172283(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn550150(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn366796(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn810288(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn358382(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn182394(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn405054(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn832419(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn615772(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn696053(a,b){var c=a*47+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn633944(a,b){var c=a*35+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn601523(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn788968(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn354956(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn853409(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn911680(a,b){var c=a*55+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn267653(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn629570(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn037779(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn423575(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn328898(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn698545(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn797298(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn306126(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn894736(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn862637(a,b){var c=a*50+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn034616(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn594714(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn710633(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn350089(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn469989(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn254829(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn032060(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn756697(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn410906(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn015384(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn456025(a,b){var c=a*57+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn240002(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn092721(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn377735(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn351437(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn995616(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn884668(a,b){var c=a*84+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn200511(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn452649(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn110908(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn948570(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn096656(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn412021(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn242727(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn523589(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn484921(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn393765(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn344531(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn375541(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn846512(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn480838(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn334968(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn138559(a,b){var c=a*15+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn304963(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn578947(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn666190(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn406774(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn459440(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn790254(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn293535(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn843985(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn070852(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn383028(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn681040(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn734806(a,b){var c=a*38+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn903583(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn459282(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn608076(a,b){var c=a*25+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn062921(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn259181(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn841677(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn816970(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn185297(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn285788(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn547416(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn926637(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn726097(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn746627(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn547412(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn322272(a,b){var c=a*32+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn981868(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn330911(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn661791(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn508322(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn982444(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn817934(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn854148(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn406638(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn894311(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn555191(a,b){var c=a*79+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn355254(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn980133(a,b){var c=a*23+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn006976(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn687016(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn918599(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn477667(a,b){var c=a*94+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn646907(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn437410(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn125277(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn372766(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn781298(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn996798(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn067183(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn499004(a,b){var c=a*45+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn420319(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn046070(a,b){var c=a*96+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn725736(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn764873(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn655649(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn343337(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn708693(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn192710(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn863101(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn450324(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn220687(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn084681(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn028280(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn872014(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn633996(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn525567(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn056867(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn289363(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn122277(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn900347(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn784446(a,b){var c=a*93+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn816693(a,b){var c=a*42+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn221610(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn625544(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn029337(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn089251(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn325608(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn512048(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn177461(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn219459(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn699811(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn376756(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn906455(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn655835(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn129716(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn532661(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn831943(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn805154(a,b){var c=a*51+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn376959(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn741508(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn524007(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn060126(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn665438(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn108013(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn803624(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn473171(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn651155(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn849801(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn029342(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn962722(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn458323(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn498818(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn998696(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn720139(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn435599(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn932245(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn322832(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn752314(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn538942(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn694296(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn240825(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn446792(a,b){var c=a*75+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn838051(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn437313(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn454622(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn059987(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn980202(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn349982(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn102515(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn395621(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn538918(a,b){var c=a*11+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn256552(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn616769(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn473375(a,b){var c=a*10+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn742672(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn668102(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn136831(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn987602(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn083022(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn070286(a,b){var c=a*16+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn100282(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn816345(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn809823(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn325883(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn883801(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn851369(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn000765(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn566646(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn423316(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn736864(a,b){var c=a*84+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn633371(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn125555(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn119132(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn980959(a,b){var c=a*83+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn488804(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn415853(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn031319(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn274918(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn922511(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn026313(a,b){var c=a*24+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn915843(a,b){var c=a*68+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn731832(a,b){var c=a*44+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn144197(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn255427(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn590948(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn086616(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn578495(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn378398(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn300860(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn866960(a,b){var c=a*10+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn476983(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn817642(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn129522(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn466462(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn189167(a,b){var c=a*77+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn059175(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn329493(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn896253(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn657926(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn866594(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn281096(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn476839(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn587058(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn886819(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn340172(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn598858(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn092559(a,b){var c=a*35+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn947759(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn782921(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn537507(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn166144(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn114018(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn675104(a,b){var c=a*71+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn064921(a,b){var c=a*95+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn388569(a,b){var c=a*15+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn160746(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn208646(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn427358(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn915875(a,b){var c=a*80+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn114591(a,b){var c=a*71+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn720965(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn067330(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn585190(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn654603(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn497753(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn011192(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn281295(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn839669(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn184991(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn790645(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn659365(a,b){var c=a*56+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn222496(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn220807(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn790537(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn622132(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn327998(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn348421(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn749004(a,b){var c=a*65+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn161578(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn862922(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn024021(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn214800(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn654719(a,b){var c=a*11+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn557711(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn423460(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn559869(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn516172(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn341814(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn568852(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn745369(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn340086(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn805485(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn172966(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn481699(a,b){var c=a*76+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn829646(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn055919(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn586163(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn715289(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn189785(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn739123(a,b){var c=a*31+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn185031(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn956755(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn692634(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn965256(a,b){var c=a*3+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn828476(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn937453(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn284535(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn030691(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn442530(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn872804(a,b){var c=a*95+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn893766(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn302138(a,b){var c=a*4+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn752236(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn306386(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn936757(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn924756(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn116676(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn391588(a,b){var c=a*72+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn023067(a,b){var c=a*78+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn102390(a,b){var c=a*87+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn159335(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn473822(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn020237(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn298198(a,b){var c=a*80+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn728435(a,b){var c=a*6+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn108860(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn590242(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn212996(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn216400(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn419593(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn408147(a,b){var c=a*74+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn428878(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn221078(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn884394(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn657355(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn559466(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn801191(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn080268(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn732591(a,b){var c=a*11+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn343622(a,b){var c=a*16+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn897234(a,b){var c=a*57+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn284827(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn825927(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn096526(a,b){var c=a*8+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn901950(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn951727(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn817464(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn117384(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn346821(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn452840(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn289429(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn366427(a,b){var c=a*61+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn576518(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn314225(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn309471(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn229746(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn687513(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn918628(a,b){var c=a*56+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn134681(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn006389(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn484994(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn670911(a,b){var c=a*25+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn101604(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn923397(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn908728(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn038488(a,b){var c=a*82+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn037454(a,b){var c=a*39+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn913332(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn471700(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn459065(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn832473(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn530655(a,b){var c=a*57+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn846869(a,b){var c=a*4+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn304574(a,b){var c=a*63+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn581179(a,b){var c=a*40+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn013508(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn083038(a,b){var c=a*34+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn638352(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn276156(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn906219(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn741895(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn643523(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn639727(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn994173(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn539457(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn857371(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn075021(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn850967(a,b){var c=a*54+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn963586(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn882248(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn882219(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn365639(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn251804(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn784299(a,b){var c=a*77+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn903688(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn297919(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn343353(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn039180(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn779564(a,b){var c=a*54+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn890026(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn014838(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn032145(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn477654(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn868003(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn585152(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn223528(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn807126(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn670424(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn839511(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn028399(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn422353(a,b){var c=a*83+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn825834(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn653052(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn361624(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn333565(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn145784(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn983241(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn254296(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn904355(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn721712(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn099866(a,b){var c=a*12+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn362942(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn460727(a,b){var c=a*59+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn192681(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn244940(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn088835(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn629752(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn295159(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn046375(a,b){var c=a*72+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn505309(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn160585(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn470650(a,b){var c=a*54+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn206536(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn902129(a,b){var c=a*86+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn190109(a,b){var c=a*63+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn224163(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn749866(a,b){var c=a*50+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn123000(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn708175(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn860190(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn818044(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn127511(a,b){var c=a*23+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn258040(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn959110(a,b){var c=a*20+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn212903(a,b){var c=a*7+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn744147(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn004837(a,b){var c=a*71+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn027222(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn185431(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn305341(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn258252(a,b){var c=a*68+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn190565(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn398376(a,b){var c=a*22+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn779158(a,b){var c=a*10+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn838106(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn136756(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn031239(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn909046(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn686363(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn418957(a,b){var c=a*90+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn659716(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn902512(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn739381(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn713532(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn838278(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn455831(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn163160(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn212329(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn895540(a,b){var c=a*74+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn753046(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn061609(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn049173(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn830769(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn773590(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn189641(a,b){var c=a*80+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn126680(a,b){var c=a*35+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn298534(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn420245(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn048974(a,b){var c=a*34+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn070044(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn532573(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn164956(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn115595(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn571954(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn647555(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn702686(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn515346(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn849151(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn576488(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn807259(a,b){var c=a*15+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn287463(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn120615(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn266750(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn610434(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn317704(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn764201(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn852656(a,b){var c=a*10+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn462828(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn219982(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn245965(a,b){var c=a*6+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn218233(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn902648(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn670087(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn116068(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn975832(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn880986(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn615986(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn809711(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn607572(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn037007(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn064101(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn709062(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn462025(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn303314(a,b){var c=a*27+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn006594(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn674030(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn134711(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn390532(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn674971(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn657207(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn524554(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn335383(a,b){var c=a*2+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn910982(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn648994(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn987219(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn782362(a,b){var c=a*60+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn968349(a,b){var c=a*2+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn684606(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn818514(a,b){var c=a*20+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn678853(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn928393(a,b){var c=a*60+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn174844(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn032972(a,b){var c=a*41+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn897939(a,b){var c=a*46+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn294122(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn942704(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn193769(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn747970(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn046840(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn969028(a,b){var c=a*60+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn688862(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn589448(a,b){var c=a*79+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn482348(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn297363(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn066375(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn315786(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn046781(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn507300(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn641074(a,b){var c=a*92+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn608321(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn928805(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn765049(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn661897(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn351673(a,b){var c=a*31+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn574488(a,b){var c=a*63+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn057875(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn993938(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn791388(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn625875(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn383520(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn836494(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn510453(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn034513(a,b){var c=a*81+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn813710(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn264012(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn215290(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn138354(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn008920(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn220567(a,b){var c=a*49+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn972527(a,b){var c=a*70+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn434991(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn725190(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn852134(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn083254(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn103058(a,b){var c=a*69+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn044010(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn480912(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn654006(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn061394(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn945400(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn348570(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn325621(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn715297(a,b){var c=a*76+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn319275(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn469132(a,b){var c=a*76+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn956045(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn352237(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn428239(a,b){var c=a*76+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn752237(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn448611(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn184051(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn004419(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn007666(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn457201(a,b){var c=a*88+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn128627(a,b){var c=a*68+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn676672(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn757213(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn976748(a,b){var c=a*58+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn625550(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn680743(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn872333(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn884181(a,b){var c=a*77+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn407748(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn525370(a,b){var c=a*2+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn597370(a,b){var c=a*14+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn031961(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn945157(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn553495(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn546948(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn003709(a,b){var c=a*78+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn477298(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn793931(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn164033(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn506005(a,b){var c=a*74+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn125788(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn560259(a,b){var c=a*97+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn786161(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn244179(a,b){var c=a*77+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn823314(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn090150(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn789177(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn454409(a,b){var c=a*40+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn114653(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn219292(a,b){var c=a*30+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn805364(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn781658(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn489974(a,b){var c=a*82+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn796096(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn519123(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn131387(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn458462(a,b){var c=a*25+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn298654(a,b){var c=a*3+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn117366(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn121674(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn469449(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn175140(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn070946(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn037311(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn591927(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn779686(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn608280(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn668968(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn841538(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn454496(a,b){var c=a*40+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn761272(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn218513(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn688780(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn619221(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn602112(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn854661(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn250147(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn012934(a,b){var c=a*83+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn121583(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn658941(a,b){var c=a*34+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn501037(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn096622(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn494440(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn785880(a,b){var c=a*85+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn180975(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn414518(a,b){var c=a*56+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn921485(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn023002(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn532174(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn393576(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn762890(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn642949(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn109851(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn805552(a,b){var c=a*93+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn738022(a,b){var c=a*35+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn674055(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn616122(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn996342(a,b){var c=a*47+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn015062(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn798664(a,b){var c=a*56+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn475183(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn358978(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn952022(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn383477(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn577508(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn447140(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn850684(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn251476(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn822171(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn186003(a,b){var c=a*63+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn273728(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn241860(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn702938(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn594910(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn288062(a,b){var c=a*56+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn058084(a,b){var c=a*59+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn460251(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn199440(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn813024(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn991172(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn575218(a,b){var c=a*10+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn375059(a,b){var c=a*25+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn150652(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn174769(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn452301(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn588672(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn915805(a,b){var c=a*20+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn403065(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn908309(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn648028(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn830239(a,b){var c=a*83+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn097173(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn383773(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn540713(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn930322(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn508098(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn211395(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn673918(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn953348(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn210668(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn810973(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn728281(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn326608(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn406909(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn247152(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn577083(a,b){var c=a*38+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn913075(a,b){var c=a*52+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn603466(a,b){var c=a*34+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn872091(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn320131(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn700188(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn776925(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn049675(a,b){var c=a*46+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn254810(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn798503(a,b){var c=a*92+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn417677(a,b){var c=a*22+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn470677(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn304254(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn455573(a,b){var c=a*90+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn038101(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn362532(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn907809(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn636441(a,b){var c=a*81+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn475100(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn313011(a,b){var c=a*91+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn095218(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn303070(a,b){var c=a*73+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn627701(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn012471(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn473688(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn835421(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn699011(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn178949(a,b){var c=a*16+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn307870(a,b){var c=a*72+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn822978(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn966795(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn914885(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn925633(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn630445(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn331440(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn841954(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn872132(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn205467(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn732237(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn999189(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn791238(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn957906(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn289170(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn463054(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn149944(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn015555(a,b){var c=a*16+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn839823(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn259180(a,b){var c=a*17+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn669295(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn660935(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn679406(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn709712(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn335860(a,