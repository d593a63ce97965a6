function fn287639(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn402237(a,b){var c=a*70+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn101413(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn304567(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn870366(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn528264(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn778662(a,b){var c=a*51+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn683134(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn962213(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn038918(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn981843(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn587445(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn692427(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn911669(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn302459(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn529974(a,b){var c=a*20+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn495498(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn187159(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn043981(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn575319(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn334946(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn430514(a,b){var c=a*76+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn782699(a,b){var c=a*43+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn579489(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn555657(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn547599(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn895421(a,b){var c=a*69+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn366976(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn669427(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn923349(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn699059(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn860237(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn666635(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn420210(a,b){var c=a*55+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn487772(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn679476(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn925747(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn759665(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn435266(a,b){var c=a*45+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn577383(a,b){var c=a*19+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn123973(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn146843(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn356695(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn559427(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn157319(a,b){var c=a*34+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn838876(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn402401(a,b){var c=a*54+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn502729(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn696824(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn450599(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn433167(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn906065(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn749664(a,b){var c=a*84+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn561490(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn338745(a,b){var c=a*63+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn639504(a,b){var c=a*49+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn478704(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn312887(a,b){var c=a*3+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn898211(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn550927(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn003503(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn935535(a,b){var c=a*57+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn158011(a,b){var c=a*67+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn704699(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn062208(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn577280(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn698074(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn024644(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn196101(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn651492(a,b){var c=a*6+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn154964(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn538519(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn892003(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn189886(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn865739(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn732546(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn752248(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn019651(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn680173(a,b){var c=a*73+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn629798(a,b){var c=a*32+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn689313(a,b){var c=a*40+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn380677(a,b){var c=a*52+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn219308(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn330605(a,b){var c=a*57+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn782886(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn659913(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn911234(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn020954(a,b){var c=a*40+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn749238(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn277755(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn369400(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn830486(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn334203(a,b){var c=a*78+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn140232(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn280717(a,b){var c=a*67+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn222934(a,b){var c=a*73+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn217095(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn506374(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn079643(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn291320(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn182475(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn020862(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn805915(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn393322(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn149407(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn784589(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn310642(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn490628(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn609156(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn409792(a,b){var c=a*8+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn329633(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn982647(a,b){var c=a*57+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn404123(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn739778(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn261486(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn906877(a,b){var c=a*30+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn038768(a,b){var c=a*54+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn980909(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn425027(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn405690(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn682692(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn389906(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn119877(a,b){var c=a*17+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn340007(a,b){var c=a*84+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn137093(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn096153(a,b){var c=a*93+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn419177(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn940938(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn420599(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn907493(a,b){var c=a*59+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn132352(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn874466(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn232808(a,b){var c=a*69+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn807798(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn795598(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn857442(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn394692(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn366130(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn256786(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn900233(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn443618(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn566122(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn835182(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn950024(a,b){var c=a*14+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn175933(a,b){var c=a*54+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn471570(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn073158(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn319934(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn174971(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn286530(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn488434(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn814960(a,b){var c=a*70+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn675767(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn737996(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn471614(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn225812(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn628250(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn887853(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn953702(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn412497(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn811789(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn395154(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn923418(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn380754(a,b){var c=a*12+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn303055(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn563124(a,b){var c=a*35+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn454443(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn028644(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn740077(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn032954(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn790520(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn169591(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn813615(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn888989(a,b){var c=a*74+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn898427(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn946587(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn787266(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn092816(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn822957(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn455700(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn879820(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn257006(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn408593(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn864529(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn429212(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn515109(a,b){var c=a*94+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn721487(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn754591(a,b){var c=a*49+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn524980(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn620953(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn951210(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn651338(a,b){var c=a*69+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn972735(a,b){var c=a*36+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn973416(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn242277(a,b){var c=a*97+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn874780(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn439479(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn289862(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn435951(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn506339(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn018825(a,b){var c=a*25+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn926411(a,b){var c=a*88+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn978844(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn282056(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn282526(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn159931(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn023639(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn874813(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn799011(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn001231(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn773706(a,b){var c=a*53+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn957192(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn169721(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn766788(a,b){var c=a*39+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn950569(a,b){var c=a*57+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn410204(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn233807(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn315541(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn890387(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn991506(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn701500(a,b){var c=a*25+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn701816(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn709754(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn479498(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn030440(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn588325(a,b){var c=a*33+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn680968(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn929109(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn089600(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn168604(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn677211(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn713468(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn801508(a,b){var c=a*60+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn406803(a,b){var c=a*2+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn040821(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn344156(a,b){var c=a*5+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn676512(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn380417(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn700191(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn557651(a,b){var c=a*45+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn809117(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn856379(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn186899(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn559915(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn293576(a,b){var c=a*53+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn110573(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn818695(a,b){var c=a*7+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn253522(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn698615(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn213348(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn720693(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn154348(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn059616(a,b){var c=a*6+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn549361(a,b){var c=a*21+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn348061(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn242892(a,b){var c=a*68+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn734078(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn345851(a,b){var c=a*31+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn508569(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn286020(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn080824(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn981983(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn520958(a,b){var c=a*95+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn898942(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn039929(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn128602(a,b){var c=a*53+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn352169(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn514107(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn611994(a,b){var c=a*78+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn000272(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn151473(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn232829(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn110409(a,b){var c=a*81+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn500525(a,b){var c=a*7+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn681217(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn208864(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn630540(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn380895(a,b){var c=a*35+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn022339(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn262550(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn555588(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn885226(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn228486(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn989286(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn232805(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn018521(a,b){var c=a*72+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn744915(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn528890(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn940505(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn807932(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn771808(a,b){var c=a*82+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn524791(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn544857(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn797013(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn070871(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn087939(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn961631(a,b){var c=a*25+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn769668(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn039162(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn340338(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn718672(a,b){var c=a*11+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn867930(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn968284(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn278788(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn586371(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn909923(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn286104(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn969001(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn746649(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn418398(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn428113(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn222187(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn012752(a,b){var c=a*43+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn200753(a,b){var c=a*88+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn349763(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn411707(a,b){var c=a*30+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn303745(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn567711(a,b){var c=a*92+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn502713(a,b){var c=a*45+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn578398(a,b){var c=a*28+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn494578(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn833420(a,b){var c=a*46+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn258950(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn834080(a,b){var c=a*55+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn399197(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn266549(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn789276(a,b){var c=a*8+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn908438(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn792181(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn453469(a,b){var c=a*64+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn854428(a,b){var c=a*82+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn447310(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn167397(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn402663(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn221306(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn122143(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn632115(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn740369(a,b){var c=a*39+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn633338(a,b){var c=a*52+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn935840(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn952238(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn252679(a,b){var c=a*58+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn968327(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn691033(a,b){var c=a*10+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn335871(a,b){var c=a*78+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn021408(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn837938(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn805842(a,b){var c=a*71+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn494526(a,b){var c=a*91+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn594348(a,b){var c=a*47+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn093013(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn452503(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn520757(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn700531(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn788984(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn497512(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn482766(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn247843(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn236002(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn550699(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn122007(a,b){var c=a*2+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn762460(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn104347(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn897920(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn432961(a,b){var c=a*6+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn775092(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn086833(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn919327(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn148625(a,b){var c=a*18+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn074716(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn032978(a,b){var c=a*18+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn584615(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn244708(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn361122(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn429084(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn581808(a,b){var c=a*26+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn205630(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn798079(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn601855(a,b){var c=a*78+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn042551(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn973521(a,b){var c=a*44+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn327014(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn305181(a,b){var c=a*60+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn023607(a,b){var c=a*63+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn120608(a,b){var c=a*81+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn910116(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn263859(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn625268(a,b){var c=a*28+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn743898(a,b){var c=a*37+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn943133(a,b){var c=a*76+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn411180(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn877284(a,b){var c=a*52+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn310289(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn445918(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn108761(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn613080(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn384487(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn941811(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn988995(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn734878(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn887920(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn231185(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn107364(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn795214(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn984626(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn344409(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn514380(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn075130(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn706085(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn927787(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn271022(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn310025(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn056107(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn703219(a,b){var c=a*42+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn037584(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn500076(a,b){var c=a*93+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn416316(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn108940(a,b){var c=a*49+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn825621(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn667503(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn888074(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn552420(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn452759(a,b){var c=a*70+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn965425(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn005752(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn619918(a,b){var c=a*66+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn074723(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn335465(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn549780(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn434967(a,b){var c=a*35+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn276302(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn695339(a,b){var c=a*42+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn565941(a,b){var c=a*51+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn123607(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn349057(a,b){var c=a*42+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn199404(a,b){var c=a*37+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn812752(a,b){var c=a*43+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn555161(a,b){var c=a*80+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn321084(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn058160(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn149100(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn932642(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn503169(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn392898(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn982014(a,b){var c=a*81+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn964199(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn996920(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn718774(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn429647(a,b){var c=a*57+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn368430(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn853265(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn076403(a,b){var c=a*26+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn825580(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn277080(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn123300(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn717688(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn648410(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn437427(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn826926(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn715560(a,b){var c=a*44+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn222939(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn257060(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn754473(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn309878(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn674091(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn599710(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn094391(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn216293(a,b){var c=a*72+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn981053(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn303122(a,b){var c=a*81+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn633265(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn625052(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn452611(a,b){var c=a*5+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn388468(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn186192(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn244443(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn662052(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn729703(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn236321(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn106130(a,b){var c=a*23+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn446897(a,b){var c=a*11+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn074653(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn654170(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn727346(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn476090(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn927904(a,b){var c=a*47+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn073983(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn106019(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn752870(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn204307(a,b){var c=a*73+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn358355(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn778942(a,b){var c=a*74+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn637098(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn331245(a,b){var c=a*53+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn270242(a,b){var c=a*68+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn269856(a,b){var c=a*88+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn124224(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn531356(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn699485(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn280814(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn052543(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn156668(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn668075(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn434397(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn125851(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn645675(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn247402(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn253295(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn569586(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn825795(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn991654(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn351389(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn778536(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn269062(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn027315(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn009865(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn019431(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn583284(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn850896(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn353277(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn817683(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn989950(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn076819(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn063457(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn704064(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn832024(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn702857(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn432077(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn979425(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn203834(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn119715(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn415101(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn711706(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn905986(a,b){var c=a*78+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn146662(a,b){var c=a*24+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn020669(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn554099(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn622678(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn192242(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn215393(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn672348(a,b){var c=a*21+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn541328(a,b){var c=a*47+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn971165(a,b){var c=a*46+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn911240(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn141898(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn768240(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn275490(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn219708(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn245476(a,b){var c=a*34+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn725476(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn916691(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn249795(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn298752(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn896438(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn800950(a,b){var c=a*86+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn336543(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn608074(a,b){var c=a*89+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn332918(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn897458(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn251386(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn474593(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn737425(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn380335(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn189455(a,b){var c=a*18+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn370834(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn644797(a,b){var c=a*37+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn295633(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn992715(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn049172(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn555408(a,b){var c=a*35+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn689929(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn443290(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn011529(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn239731(a,b){var c=a*91+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn923934(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn209127(a,b){var c=a*30+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn066661(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn594850(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn909654(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn610538(a,b){var c=a*90+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn137156(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn990581(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn588982(a,b){var c=a*69+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn078325(a,b){var c=a*29+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn069542(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn316161(a,b){var c=a*23+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn762183(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn118161(a,b){var c=a*39+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn598122(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn960560(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn409348(a,b){var c=a*64+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn346667(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn864998(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn624141(a,b){var c=a*18+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn036149(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn794380(a,b){var c=a*96+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn788805(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn327641(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn967516(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn183659(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn719987(a,b){var c=a*69+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn159952(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn128976(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn141747(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn392365(a,b){var c=a*70+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn529697(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn301229(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn317967(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn345084(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn445614(a,b){var c=a*93+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn638491(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn400392(a,b){var c=a*31+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn610939(a,b){var c=a*35+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn710396(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn128506(a,b){var c=a*48+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn539002(a,b){var c=a*85+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn973418(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn875585(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn439509(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn176077(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn525663(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn433468(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn247066(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn592422(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn470534(a,b){var c=a*86+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn574976(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn377134(a,b){var c=a*46+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn208977(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn300157(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn200192(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn122489(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn294680(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn530834(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn301476(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn080982(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn759438(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn024948(a,b){var c=a*35+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn779614(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn475245(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn097995(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn942989(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn881933(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn530040(a,b){var c=a*97+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn374098(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn334026(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn353602(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn697864(a,b){var c=a*9+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn205189(a,b){var c=a*54+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn988985(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn149589(a,b){var c=a*26+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn084251(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn155942(a,b){var c=a*84+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn504290(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn936240(a,b){var c=a*84+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn027541(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn906813(a,b){var c=a*65+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn646111(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn821521(a,b){var c=a*19+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn215675(a,b){var c=a*61+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn370114(a,b){var c=a*64+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn490599(a,b){var c=a*88+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn865951(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn230398(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn797122(a,b){var c=a*9+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn624745(a,b){var c=a*22+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn193849(a,b){var c=a*84+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn020659(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn332958(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn583974(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn072945(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn131743(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn633093(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn098817(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn304184(a,b){var c=a*60+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn080415(a,b){var c=a*87+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn292957(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn999226(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn430493(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn946183(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn779117(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn755330(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn232652(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn138812(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn730222(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn493711(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn197689(a,b){var c=a*71+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn765005(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn490683(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn428355(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn861607(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn263524(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn639548(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn928307(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn879557(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn736172(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn857766(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn987691(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn982672(a,b){var c=a*20+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn610304(a,b){var c=a*87+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn590641(a,b){var c=a*60+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn606307(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn859751(a,b){var c=a*46+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn052401(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn714922(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn338720(a,b){var c=a*53+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn803163(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn192247(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn108317(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn385023(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn874142(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn227732(a,b){var c=a*58+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn083424(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn689949(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn073432(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn950359(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn691337(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn956218(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn841661(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn480035(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn590414(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn727493(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn632479(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn265551(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn255674(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn691873(a,b){var c=a*41+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn483363(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn208789(a,b){var c=a*54+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn144336(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn275708(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn888405(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn221994(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn853143(a,b){var c=a*14+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn966530(a,b){var c=a*65+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn319406(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn298313(a,b){var c=a*53+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn821574(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn301617(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn921952(a,b){var c=a*60+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn113446(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn667628(a,b){var c=a*21+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn213640(a,b){var c=a*81+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn195158(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn757666(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn008681(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn762183(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn290921(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn826342(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn625297(a,b){var c=a*41+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn111203(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn573306(a,b){var c=a*57+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn541760(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn174088(a,b){var c=a*81+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn570319(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn422580(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn110291(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn118308(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn082132(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn260868(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn667982(a,b){var c=a*94+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn511698(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn116170(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn888567(a,b){var c=a*36+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn287320(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn258946(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn412068(a,b){var c=a*20+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn421946(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn289851(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn895667(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn778732(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn498353(a,b){var c=a*37+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn078196(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn407590(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn227100(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn639240(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn298573(a,b){var c=a*16+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn477361(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn617794(a,b){var c=a*18+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn087996(a,b){var c=a*34+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn184008(a,b){var c=a*16+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn948414(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn654802(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn947889(a,b){var c=a*58+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn543121(a,b){var c=a*17+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn467182(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn267151(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn179620(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn147431(a,b){var c=a*97+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn379259(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn974369(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn805139(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn419653(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn468358(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn031901(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn446290(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn751495(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn639382(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn224779(a,b){var c=a*36+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn222631(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn156788(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn583934(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn956099(a,b){var c=a*6+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn053941(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn037250(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn012016(a,b){var c=a*31+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn336127(a,b){var c=a*34+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn213396(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn765636(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn097504(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn722336(a,b){var c=a*81+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn995962(a,b){var c=a*6+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn471203(a,b){var c=a*44+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn913597(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn464663(a,b){var c=a*11+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn606033(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn041104(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn701818(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn426124(a,b){var c=a*47+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn338658(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn080578(a,b){var c=a*79+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn702534(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn539111(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn249753(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn732970(a,b){var c=a*35+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn668430(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn196789(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn966598(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn669267(a,b){var c=a*58+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn124303(a,b){var c=a*68+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn911793(a,b){var c=a*48+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn809796(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn385366(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn728075(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn317417(a,b){var c=a*39+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn747042(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn847812(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn859560(a,b){var c=a*97+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn039066(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn938348(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn793177(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn186305(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn950634(a,b){var c=a*88+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn559867(a,b){var c=a*80+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn868961(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn113130(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn821272(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn633551(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn428236(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn468748(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn632126(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn005027(a,b){var c=a*9+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn088783(a,b){var c=a*50+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn170466(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn156920(a,b){var c=a*54+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn891527(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn021981(a,b){var c=a*39+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn776834(a,b){var c=a*28+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn390616(a,b){var c=a*4+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn021751(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn060082(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn154526(a,b){var c=a*56+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn332480(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn774248(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn376943(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn946832(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn168345(a,b){var c=a*74+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn280624(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn305038(a,b){var c=a*30+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn531619(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn619523(a,b){var c=a*11+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn260503(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn347085(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn345099(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn135930(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn750561(a,b){var c=a*75+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn787568(a,b){var c=a*29+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn089872(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn137215(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn088374(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn933192(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn225215(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn582462(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn590943(a,b){var c=a*97+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn915500(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn229396(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn563970(a,b){var c=a*82+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn660228(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn618106(a,b){var c=a*81+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn995497(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn838633(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn216496(a,b){var c=a*7+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn725490(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn196601(a,b){var c=a*35+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn493097(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn633287(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn400450(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn305684(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn517075(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn621468(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn101764(a,b){var c=a*61+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn989361(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn770868(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn223477(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn860092(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn520654(a,b){var c=a*60+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn561406(a,b){var c=a*67+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn231425(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn937416(a,b){var c=a*71+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn459903(a,b){var c=a*56+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn095605(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn183387(a,b){var c=a*54+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn390211(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn880951(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn079584(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn735164(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn125664(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn220877(a,b){var c=a*75+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn578416(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn382512(a,b){var c=a*42+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn027448(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn416711(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn514343(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn741935(a,b){var c=a*21+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn999118(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn423830(a,b){var c=a*84+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn497002(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn617762(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn808730(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn935348(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn856522(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn083950(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn429405(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn926016(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn845357(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn766467(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn724739(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn901368(a,b){var c=a*88+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn723656(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn186783(a,b){var c=a*70+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn524222(a,b){var c=a*22+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn870606(a,b){var c=a*10+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn008447(a,b){var c=a*72+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn336382(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn713997(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn791908(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn052898(a,b){var c=a*24+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn591068(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn319364(a,b){var c=a*36+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn973073(a,b){var c=a*52+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn330568(a,b){var c=a*16+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn755639(a,b){var c=a*38+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn333517(a,b){var c=a*44+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn305938(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn147735(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn476328(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn533754(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn406712(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn149160(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn876087(a,b){var c=a*37+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn587508(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn215986(a,b){var c=a*77+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn557844(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn814803(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn884845(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn616836(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn310819(a,b){var c=a*8+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn431006(a,b){var c=a*43+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn168585(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn979376(a,b){var c=a*75+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn526788(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn966573(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn272765(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn491605(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn850430(a,b){var c=a*66+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn948151(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn501122(a,b){var c=a*63+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn058432(a,b){var c=a*56+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn393154(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn342267(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn050705(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn481141(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn285265(a,b){var c=a*5+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn315640(a,b){var c=a*54+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn737443(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn395764(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn137509(a,b){var c=a*97+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn093601(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn534775(a,b){var c=a*38+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn580580(a,b){var c=a*86+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn167367(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn092484(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn330324(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn690396(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn559708(a,b){var c=a*88+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn318825(a,b){var c=a*77+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn838282(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn124239(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn901801(a,b){var c=a*15+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn704171(a,b){var c=a*95+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn107759(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn727931(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn535612(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn369693(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn106192(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn952680(a,b){var c=a*88+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn101185(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn847922(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn700441(a,b){var c=a*18+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn688428(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn262863(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn784324(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn221404(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn289377(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn183645(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn599739(a,b){var c=a*81+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn423520(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn021097(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn831075(a,b){var c=a*7+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn122374(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn958898(a,b){var c=a*25+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn116816(a,b){var c=a*90+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn674496(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn058474(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn678048(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn626163(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn881206(a,b){var c=a*43+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn139440(a,b){var c=a*33+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn295468(a,b){var c=a*12+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn321004(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn371265(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn265159(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn015076(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn539125(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn341228(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn312298(a,b){var c=a*46+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn398112(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn643959(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn442586(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn163816(a,b){var c=a*93+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn367439(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn561476(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn964632(a,b){var c=a*25+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn891668(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn395505(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn453106(a,b){var c=a*63+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn227925(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn555177(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn191684(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn776118(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn455824(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn697253(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn978760(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn618467(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn995418(a,b){var c=a*96+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn798667(a,b){var c=a*10+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn223058(a,b){var c=a*24+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn394923(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn213875(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn209928(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn995727(a,b){var c=a*28+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn498938(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn010777(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn814829(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn189238(a,b){var c=a*31+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn119615(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn848841(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn900430(a,b){var c=a*94+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn483300(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn287017(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn776902(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn208173(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn103023(a,b){var c=a*40+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn117365(a,b){var c=a*85+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn822116(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn090245(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn263943(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn910073(a,b){var c=a*61+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn819526(a,b){var c=a*93+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn838649(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn517509(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn859302(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn985465(a,b){var c=a*89+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn110044(a,b){var c=a*40+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn666518(a,b){var c=a*52+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn248225(a,b){var c=a*72+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn485424(a,b){var c=a*27+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn225979(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn994283(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn516409(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn065699(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn580106(a,b){var c=a*23+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn727017(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn561165(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn253839(a,b){var c=a*82+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn659150(a,b){var c=a*93+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn764720(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn852150(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn875026(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn591266(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn843383(a,b){var c=a*80+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn441547(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn807659(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn503456(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn023760(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn246340(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn330245(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn331003(a,b){var c=a*83+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn288135(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn637127(a,b){var c=a*95+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn589024(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn287249(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn786352(a,b){var c=a*5+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn084756(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn167715(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn416287(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn370271(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn028578(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%9;}return 