function fn565996(a,b){var c=a*11+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn445051(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn235262(a,b){var c=a*88+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn155023(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn195454(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn916522(a,b){var c=a*41+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn243717(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn959411(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn522448(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn168591(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn248721(a,b){var c=a*46+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn754642(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn096203(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn095266(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn650247(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn178644(a,b){var c=a*3+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn499050(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn165303(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn223927(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn907016(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn316329(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn886647(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn238024(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn224604(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn289572(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn147703(a,b){var c=a*32+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn624170(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn230050(a,b){var c=a*76+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn593990(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn943978(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn172311(a,b){var c=a*68+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn383874(a,b){var c=a*84+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn341572(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn584747(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn762219(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn491948(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn151469(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn351311(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn398274(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn280980(a,b){var c=a*31+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn364761(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn549539(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn734011(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn488332(a,b){var c=a*34+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn795343(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn301174(a,b){var c=a*11+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn623990(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn540098(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn021170(a,b){var c=a*28+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn285552(a,b){var c=a*66+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn863589(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn921182(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn165626(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn442305(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn005595(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn377254(a,b){var c=a*39+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn357051(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn064309(a,b){var c=a*26+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn813857(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn225498(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn643503(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn875243(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn356697(a,b){var c=a*84+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn251003(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn939009(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn303421(a,b){var c=a*93+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn411850(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn650530(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn944342(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn121766(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn010627(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn126576(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn116995(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn921860(a,b){var c=a*96+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn458691(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn533403(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn827986(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn681135(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn242952(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn574675(a,b){var c=a*25+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn326613(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn484051(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn992906(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn535475(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn474165(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn399443(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn399757(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn311639(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn393839(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn826264(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn579723(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn890205(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn120705(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn657025(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn621548(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn717413(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn304754(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn708970(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn766640(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn840501(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn852596(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn963290(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn060084(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn624614(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn883893(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn311997(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn122280(a,b){var c=a*35+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn033228(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn526301(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn500945(a,b){var c=a*16+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn561480(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn591501(a,b){var c=a*49+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn078064(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn416841(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn037683(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn598657(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn040147(a,b){var c=a*15+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn895438(a,b){var c=a*61+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn677623(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn090363(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn914413(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn492445(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn237428(a,b){var c=a*75+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn843099(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn633764(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn929902(a,b){var c=a*5+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn826359(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn966691(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn971841(a,b){var c=a*50+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn738718(a,b){var c=a*42+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn316578(a,b){var c=a*30+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn485017(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn090054(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn510792(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn964836(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn027673(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn076063(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn463314(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn284845(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn436197(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn962690(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn093178(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn252775(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn465164(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn092202(a,b){var c=a*89+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn247937(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn281799(a,b){var c=a*3+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn543656(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn569573(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn640187(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn673878(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn523346(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn422038(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn440688(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn849345(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn546603(a,b){var c=a*61+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn918254(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn455678(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn074261(a,b){var c=a*64+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn088598(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn962238(a,b){var c=a*9+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn225082(a,b){var c=a*39+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn621529(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn761901(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn587154(a,b){var c=a*93+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn900914(a,b){var c=a*63+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn804972(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn233244(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn484868(a,b){var c=a*45+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn700448(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn240690(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn547534(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn405548(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn117458(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn148422(a,b){var c=a*27+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn627918(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn050467(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn880878(a,b){var c=a*20+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn510303(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn888020(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn858895(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn224799(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn605426(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn357353(a,b){var c=a*87+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn990000(a,b){var c=a*78+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn807755(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn987649(a,b){var c=a*43+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn889193(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn010103(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn743362(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn110676(a,b){var c=a*68+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn523605(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn362949(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn384739(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn633644(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn673265(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn429315(a,b){var c=a*5+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn384870(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn025554(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn791465(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn627441(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn000320(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn833448(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn409197(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn613804(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn962026(a,b){var c=a*72+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn794110(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn255725(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn945645(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn772469(a,b){var c=a*61+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn176843(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn421590(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn031049(a,b){var c=a*30+b;