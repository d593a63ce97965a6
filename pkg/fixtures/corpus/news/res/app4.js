function fn557212(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn820048(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn238625(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn780312(a,b){var c=a*47+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn120389(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn233753(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn321074(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn713969(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn740698(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn044600(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn386740(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn742080(a,b){var c=a*21+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn602858(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn090934(a,b){var c=a*96+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn770129(a,b){var c=a*94+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn128095(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn314123(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn222919(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn170057(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn763684(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn958317(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn169121(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn694454(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn476818(a,b){var c=a*70+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn340475(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn872716(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn198734(a,b){var c=a*30+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn176711(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn555022(a,b){var c=a*16+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn633510(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn890166(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn693312(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn136002(a,b){var c=a*20+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn954553(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn953001(a,b){var c=a*9+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn162011(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn193530(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn559280(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn256801(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn479210(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn303030(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn010467(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn312118(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn635306(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn080656(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn761367(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn838257(a,b){var c=a*97+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn268841(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn455183(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn549055(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn625862(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn447683(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn318145(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn496339(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn102533(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn546881(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn842819(a,b){var c=a*82+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn919978(a,b){var c=a*48+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn647969(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn317216(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn559522(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn537490(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn810021(a,b){var c=a*85+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn410382(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn607540(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn196885(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn832413(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn648654(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn828188(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn372172(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn773028(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn037203(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn676117(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn115967(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn265082(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn604421(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn044322(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn430284(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn476177(a,b){var c=a*41+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn917581(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn606821(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn037466(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn277413(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn497376(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn855221(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn129120(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn314677(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn780930(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn929664(a,b){var c=a*70+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn332420(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn596805(a,b){var c=a*60+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn928498(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn128375(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn105238(a,b){var c=a*95+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn931162(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn471914(a,b){var c=a*25+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn656731(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn920445(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn577415(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn737185(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn974508(a,b){var c=a*55+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn370640(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn838195(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn157792(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn836220(a,b){var c=a*33+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn717841(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn898982(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn637489(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn568810(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn301609(a,b){var c=a*10+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn652375(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn444534(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn404303(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn064535(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn778471(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn109150(a,b){var c=a*21+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn621897(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn015801(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn020120(a,b){var c=a*82+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn005895(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn566154(a,b){var c=a*12+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn893893(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn013146(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn908267(a,b){var c=a*3+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn725384(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn881341(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn128860(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn688298(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn328801(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn047875(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn239517(a,b){var c=a*72+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn801000(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn295777(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn831526(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn402339(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn064551(a,b){var c=a*69+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn307119(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn352928(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn346407(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn419039(a,b){var c=a*43+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn845394(a,b){var c=a*76+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn654154(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn682302(a,b){var c=a*77+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn074739(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn134935(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn605403(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn120620(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn104085(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn561531(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn635444(a,b){var c=a*20+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn182509(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn039775(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn519755(a,b){var c=a*42+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn196709(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn251481(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn161799(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn706250(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn545101(a,b){var c=a*58+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn900747(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn266196(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn494492(a,b){var c=a*49+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn410938(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn198008(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn086356(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn480974(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn911350(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn771930(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn001981(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn461196(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn725003(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn160424(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn430508(a,b){var c=a*62+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn015273(a,b){var c=a*54+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn389546(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn257436(a,b){var c=a*74+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn893738(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn773755(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn042301(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn096326(a,b){var c=a*53+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn896147(a,b){var c=a*13+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn444089(a,b){var c=a*60+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn362894(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn285483(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn202836(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn055051(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn380830(a,b){var c=a*13+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn487686(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn406674(a,b){var c=a*92+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn990825(a,b){var c=a*25+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn890448(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn728275(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn011490(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn476436(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn984633(a,b){var c=a*75+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn552059(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn104162(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn406936(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn842258(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn833762(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn066218(a,b){var c=a*53+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn726187(a,b){var c=a*80+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn253719(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn810923(a,b){var c=a*17+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn494326(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn632744(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn434447(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn630633(a,b){var c=a*90+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn556551(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn068995(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn822871(a,b){var c=a*6+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn521158(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn356322(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn421176(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn627259(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn318011(a,b){var c=a*23+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn794101(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn163127(a,b){var c=a*71+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn927343(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn133868(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn763663(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn549911(a,b){var c=a*40+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn966084(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn224673(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn055097(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn426097(a,b){var c=a*45+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn212495(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn317417(a,b){var c=a*93+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn244482(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn053726(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn892672(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn709639(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn498846(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn647453(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn784974(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn153038(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn293068(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn902534(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn393021(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn758551(a,b){var c=a*66+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn407485(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn676755(a,b){var c=a*3+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn319099(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn682494(a,b){var c=a*33+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn376524(a,b){var c=a*97+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn660994(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn879178(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn893672(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn391185(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn285306(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn891723(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn323637(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn254479(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn206654(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn676431(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn931198(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn177784(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn078632(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn372673(a,b){var c=a*33+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn708368(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn408907(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn129777(a,b){var c=a*73+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn288978(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn327985(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn912766(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn014625(a,b){var c=a*61+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn380370(a,b){var c=a*78+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn312808(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn224370(a,b){var c=a*2+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn574993(a,b){var c=a*55+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn997713(a,b){var c=a*6+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn378156(a,b){var c=a*30+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn068666(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn980800(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn306335(a,b){var c=a*32+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn730370(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn433617(a,b){var c=a*77+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn698490(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn387506(a,b){var c=a*26+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn475885(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn010501(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn894871(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn459119(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn312872(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn442900(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn738541(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn028661(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn244359(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn876043(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn731778(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn899558(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn857284(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn023519(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn096272(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn849984(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn048775(a,b){var c=a*6+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn020658(a,b){var c=a*17+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn824050(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn694977(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn983342(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn770406(a,b){var c=a*10+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn599417(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn363297(a,b){var c=a*26+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn413880(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn998778(a,b){var c=a*46+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn706159(a,b){var c=a*39+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn713815(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn789188(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn033819(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn510252(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn125475(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn358095(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn770229(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn509343(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn792052(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn934255(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn815028(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn258657(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn275643(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn813607(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn468250(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn819124(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn506378(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn856020(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn695619(a,b){var c=a*9+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn796216(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn423982(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn447209(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn815125(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn313762(a,b){var c=a*32+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn136921(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn246523(a,b){var c=a*97+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn313217(a,b){var c=a*5+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn793728(a,b){var c=a*42+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn300556(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn404972(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn993460(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn882191(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn141955(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn867934(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn627915(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn349185(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn978084(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn205684(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn571331(a,b){var c=a*35+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn239471(a,b){var c=a*26+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn664631(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn489610(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn405828(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn640140(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn801486(a,b){var c=a*40+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn384646(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn939971(a,b){var c=a*7+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn103299(a,b){var c=a*95+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn494726(a,b){var c=a*14+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn325968(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn676164(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn918468(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn159221(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn685999(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn452821(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn572136(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn263805(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn166045(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn644274(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn618479(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn842200(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn958207(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn322007(a,b){var c=a*60+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn338532(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn987231(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn148246(a,b){var c=a*41+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn517555(a,b){var c=a*2+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn763261(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn179637(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn484141(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn988831(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn990364(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn632615(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn551229(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn948439(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn784131(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn823883(a,b){var c=a*53+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn181552(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn677680(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn234461(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn341551(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn195973(a,b){var c=a*85+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn937054(a,b){var c=a*19+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn666811(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn947816(a,b){var c=a*88+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn198782(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn927124(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn186143(a,b){var c=a*36+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn890751(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn329268(a,b){var c=a*43+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn596652(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn805744(a,b){var c=a*84+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn304204(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn427508(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn325284(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn872964(a,b){var c=a*8+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn184502(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn033737(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn861467(a,b){var c=a*3+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn771811(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn041388(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn362572(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn898831(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn877824(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn651895(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn388959(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn377490(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn342293(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn866845(a,b){var c=a*31+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn564073(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn528696(a,b){var c=a*15+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn713033(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn661879(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn816893(a,b){var c=a*41+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn309252(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn510588(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn193087(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn650289(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn840983(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn984850(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn177600(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn329285(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn455127(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn297670(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn279481(a,b){var c=a*9+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn280176(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn776816(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn292019(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn168500(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn304423(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn381748(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn046943(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn403326(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn302789(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn064180(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn749932(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn893857(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn276111(a,b){var c=a*60+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn497347(a,b){var c=a*69+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn981281(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn642791(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn395059(a,b){var c=a*30+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn227933(a,b){var c=a*76+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn060791(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn272291(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn726435(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn286736(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn282048(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn383829(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn445376(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn674478(a,b){var c=a*11+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn565619(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn634247(a,b){var c=a*10+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn817885(a,b){var c=a*62+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn048849(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn301940(a,b){var c=a*24+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn194884(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn571199(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn065110(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn466881(a,b){var c=a*2+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn324428(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn923299(a,b){var c=a*7+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn095171(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn091246(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn459303(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn779061(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn163460(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn056022(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn981567(a,b){var c=a*26+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn868337(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn377419(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn719399(a,b){var c=a*71+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn609492(a,b){var c=a*30+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn152317(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn586611(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn378591(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn707805(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn811982(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn761819(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn021917(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn935583(a,b){var c=a*67+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn119907(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn463204(a,b){var c=a*73+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn326535(a,b){var c=a*26+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn795847(a,b){var c=a*89+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn723556(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn054526(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn486398(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn605163(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn689367(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn893875(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn534435(a,b){var c=a*14+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn005950(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn980570(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn683647(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn532873(a,b){var c=a*56+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn044162(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn459201(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn555355(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn045971(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn822626(a,b){var c=a*32+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn958509(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn674963(a,b){var c=a*91+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn968481(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn622619(a,b){var c=a*83+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn182231(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn541347(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn874907(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn357419(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn404985(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn568616(a,b){var c=a*41+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn377896(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn792298(a,b){var c=a*79+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn579322(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn626214(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn662967(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn307877(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn720113(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn087166(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn930527(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn931542(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn935082(a,b){var c=a*63+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn271506(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn585591(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn420597(a,b){var c=a*45+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn379765(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn453819(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn367868(a,b){var c=a*74+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn252145(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn561427(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn728958(a,b){var c=a*87+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn890483(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn636819(a,b){var c=a*90+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn042192(a,b){var c=a*92+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn054235(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn116123(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn420012(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn085322(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn610563(a,b){var c=a*34+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn296414(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn625628(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn885037(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn272215(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn847209(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn242085(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn400777(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn596252(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn311823(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn006106(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn063338(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn947595(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn459757(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn516686(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn739718(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn621512(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn689626(a,b){var c=a*9+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn612510(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn789273(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn200095(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn303350(a,b){var c=a*73+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn056117(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn400889(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn186332(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn490823(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn504108(a,b){var c=a*87+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn042932(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn607455(a,b){var c=a*90+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn227723(a,b){var c=a*54+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn919377(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn894544(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn834021(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn395192(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn758050(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn209958(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn915573(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn100310(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn721604(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn225395(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn958394(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn615605(a,b){var c=a*3+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn777666(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn893822(a,b){var c=a*7+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn616745(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn629093(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn119053(a,b){var c=a*14+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn252863(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn568748(a,b){var c=a*8+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn708801(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn341923(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn534558(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn218326(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn024645(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn889652(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn486643(a,b){var c=a*13+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn000859(a,b){var c=a*40+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn183430(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn079319(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn466469(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn883531(a,b){var c=a*88+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn626626(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn255051(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn883443(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn222260(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn183021(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn184067(a,b){var c=a*31+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn481054(a,b){var c=a*58+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn953945(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn869186(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn164470(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn738519(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn198525(a,b){var c=a*88+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn312789(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn752186(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn088926(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn904649(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn895995(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn770554(a,b){var c=a*15+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn196694(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn168585(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn505480(a,b){var c=a*47+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn375950(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn628943(a,b){var c=a*93+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn861632(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn346829(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn312055(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn017900(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn898583(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn119814(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn541155(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn278176(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn276000(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn273829(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn143579(a,b){var c=a*22+b;for(var i=0;i<26;i