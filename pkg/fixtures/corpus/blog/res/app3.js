function fn949586(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn729563(a,b){var c=a*85+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn707624(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn524210(a,b){var c=a*46+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn748430(a,b){var c=a*96+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn404307(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn662886(a,b){var c=a*50+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn217138(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn402137(a,b){var c=a*87+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn011567(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn447512(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn830340(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn471852(a,b){var c=a*39+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn523220(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn552785(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn491071(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn383019(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn082559(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn214002(a,b){var c=a*79+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn845070(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn708672(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn431013(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn010787(a,b){var c=a*31+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn298286(a,b){var c=a*15+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn943605(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn281464(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn399447(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn867136(a,b){var c=a*62+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn877381(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn309220(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn575917(a,b){var c=a*27+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn515116(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn974073(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn782926(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn967987(a,b){var c=a*32+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn182233(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn119048(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn380907(a,b){var c=a*85+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn913252(a,b){var c=a*63+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn221373(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn487509(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn408039(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn533636(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn780311(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn846006(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn462845(a,b){var c=a*78+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn582267(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn155081(a,b){var c=a*78+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn765544(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn856292(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn694989(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn851088(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn408246(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn370636(a,b){var c=a*85+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn193222(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn145217(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn803610(a,b){var c=a*7+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn553288(a,b){var c=a*52+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn623641(a,b){var c=a*48+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn790144(a,b){var c=a*52+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn565510(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn156681(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn856490(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn762722(a,b){var c=a*65+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn993133(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn751907(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn765523(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn547970(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn299093(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn282961(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn336130(a,b){var c=a*7+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn175052(a,b){var c=a*83+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn012648(a,b){var c=a*95+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn971868(a,b){var c=a*38+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn533576(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn189497(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn271022(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn797066(a,b){var c=a*16+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn176092(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn741863(a,b){var c=a*9+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn092256(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn758581(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn387368(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn850143(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn803184(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn565250(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn472774(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn820239(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn116411(a,b){var c=a*25+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn923780(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn871583(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn440743(a,b){var c=a*45+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn877393(a,b){var c=a*6+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn197038(a,b){var c=a*11+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn578373(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn674592(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn903539(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn687947(a,b){var c=a*62+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn895569(a,b){var c=a*58+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn009367(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn172496(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn059781(a,b){var c=a*22+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn115218(a,b){var c=a*78+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn245627(a,b){var c=a*30+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn688730(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn548070(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn313873(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn994788(a,b){var c=a*46+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn415516(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn512740(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn929895(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn892257(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn513474(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn199773(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn142367(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn198292(a,b){var c=a*62+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn262509(a,b){var c=a*31+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn122932(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn015500(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn865545(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn491092(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn792444(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn787605(a,b){var c=a*63+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn645270(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn318577(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn658087(a,b){var c=a*17+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn261485(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn569886(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn772967(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn938561(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn440136(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn692943(a,b){var c=a*95+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn532966(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn806137(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn951692(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn015967(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn052745(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn687861(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn730114(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn032642(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn615374(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn825039(a,b){var c=a*44+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn488545(a,b){var c=a*77+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn027932(a,b){var c=a*40+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn985977(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn027576(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn390142(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn484421(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn873627(a,b){var c=a*20+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn470364(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn445868(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn351111(a,b){var c=a*53+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn301855(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn402500(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn317930(a,b){var c=a*34+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn400785(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn776030(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn506526(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn432765(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn737371(a,b){var c=a*94+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn391773(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn825224(a,b){var c=a*97+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn512308(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn469310(a,b){var c=a*97+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn864774(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn494385(a,b){var c=a*89+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn005078(a,b){var c=a*66+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn230141(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn217270(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn927875(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn101691(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn196374(a,b){var c=a*78+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn864964(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn713013(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn468312(a,b){var c=a*12+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn214900(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn409720(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn749700(a,b){var c=a*38+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn700519(a,b){var c=a*22+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn436956(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn870861(a,b){var c=a*74+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn254594(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn921033(a,b){var c=a*73+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn799364(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn640468(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn401044(a,b){var c=a*85+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn366867(a,b){var c=a*77+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn150914(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn961897(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn815220(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn424627(a,b){var c=a*28+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn127012(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn226800(a,b){var c=a*47+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn894593(a,b){var c=a*77+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn065182(a,b){var c=a*11+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn989108(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn272442(a,b){var c=a*19+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn710322(a,b){var c=a*38+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn807598(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn603834(a,b){var c=a*20+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn266990(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn631908(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn044408(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn146613(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn315133(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn136524(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn521457(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn754869(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn571464(a,b){var c=a*81+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn317454(a,b){var c=a*60+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn776532(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn684878(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn225010(a,b){var c=a*65+b;for(var i=0;i<3;i