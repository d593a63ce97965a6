function fn121355(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn674958(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn085559(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn903216(a,b){var c=a*47+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn872348(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn515552(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn464092(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn853255(a,b){var c=a*60+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn602990(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn975116(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn555921(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn412489(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn760900(a,b){var c=a*23+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn152770(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn136394(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn891861(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn160146(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn603776(a,b){var c=a*13+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn925679(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn249911(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn681230(a,b){var c=a*60+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn393195(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn540061(a,b){var c=a*64+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn981310(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn868775(a,b){var c=a*80+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn249886(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn210098(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn681506(a,b){var c=a*13+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn119663(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn071170(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn395434(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn063028(a,b){var c=a*11+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn069276(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn473618(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn502086(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn941097(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn056446(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn398205(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn805364(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn303902(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn244503(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn400275(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn192315(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn021602(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn182636(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn591614(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn970541(a,b){var c=a*17+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn626921(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn978272(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn613980(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn793807(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn812210(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn693680(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn734693(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn166122(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn272607(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn467346(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn057809(a,b){var c=a*88+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn099049(a,b){var c=a*69+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn330166(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn282498(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn470072(a,b){var c=a*58+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn349775(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn879405(a,b){var c=a*65+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn641658(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn812376(a,b){var c=a*40+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn275185(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn993845(a,b){var c=a*97+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn337114(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn462395(a,b){var c=a*95+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn344735(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn753027(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn211469(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn781988(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn660097(a,b){var c=a*62+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn013977(a,b){var c=a*8+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn659486(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn564919(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn698922(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn621128(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn405563(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn100921(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn358076(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn867036(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn688741(a,b){var c=a*54+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn865340(a,b){var c=a*55+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn378196(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn586558(a,b){var c=a*67+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn513016(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn441550(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn931439(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn405899(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn565519(a,b){var c=a*50+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn111405(a,b){var c=a*66+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn022169(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn191993(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn786667(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn404806(a,b){var c=a*82+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn706691(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn798860(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn461542(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn748575(a,b){var c=a*46+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn339595(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn005443(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn519099(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn449998(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn711545(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn254674(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn981078(a,b){var c=a*59+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn100739(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn877946(a,b){var c=a*50+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn517525(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn715437(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn028955(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn094725(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn674615(a,b){var c=a*60+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn491929(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn332355(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn431440(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn660481(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn677481(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn027491(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn869531(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn439186(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn239384(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn203557(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn235498(a,b){var c=a*61+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn203338(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn343135(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn041625(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn636135(a,b){var c=a*78+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn720197(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn179890(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn906573(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn888432(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn365011(a,b){var c=a*57+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn652826(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn129994(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn072159(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn032966(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn465240(a,b){var c=a*13+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn692093(a,b){var c=a*19+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn689233(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn919332(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn194347(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn757921(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn090302(a,b){var c=a*86+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn345992(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn953511(a,b){var c=a*65+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn228890(a,b){var c=a*4+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn008062(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn705180(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn496995(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn837018(a,b){var c=a*36+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn931572(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn350082(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn593467(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn187524(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn894960(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn468752(a,b){var c=a*11+b;f