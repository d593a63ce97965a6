function fn297153(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn383063(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn488641(a,b){var c=a*58+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn033728(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn065485(a,b){var c=a*66+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn417412(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn153863(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn010372(a,b){var c=a*35+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn507681(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn145566(a,b){var c=a*88+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn733138(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn046777(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn539336(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn436876(a,b){var c=a*5+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn475820(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn781374(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn236653(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn824303(a,b){var c=a*88+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn636943(a,b){var c=a*43+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn222864(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn483375(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn626511(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn652992(a,b){var c=a*68+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn612272(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn483093(a,b){var c=a*25+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn081639(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn419288(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn470365(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn324732(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn176836(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn600812(a,b){var c=a*53+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn825165(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn450322(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn218899(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn258781(a,b){var c=a*47+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn474576(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn705577(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn745873(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn684663(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn456476(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn016362(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn921500(a,b){var c=a*39+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn121098(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn865307(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn220581(a,b){var c=a*79+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn425132(a,b){var c=a*61+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn303143(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn410411(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn737485(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn777045(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn344809(a,b){var c=a*93+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn253155(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn319443(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn158836(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn586519(a,b){var c=a*57+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn763947(a,b){var c=a*32+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn688297(a,b){var c=a*81+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn825182(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn734918(a,b){var c=a*52+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn974520(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn774431(a,b){var c=a*8+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn140545(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn928418(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn075788(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn824637(a,b){var c=a*95+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn176397(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn238967(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn498203(a,b){var c=a*26+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn458422(a,b){var c=a*6+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn590828(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn480731(a,b){var c=a*31+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn293319(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn267075(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn180919(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn850664(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn070489(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn605941(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn609236(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn888938(a,b){var c=a*62+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn487620(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn403049(a,b){var c=a*75+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn150992(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn619324(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn698175(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn697232(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn911766(a,b){var c=a*7+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn276103(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn925207(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn484582(a,b){var c=a*96+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn256814(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn866986(a,b){var c=a*6+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn160248(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn179101(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn278263(a,b){var c=a*17+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn898669(a,b){var c=a*12+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn494645(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn586287(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn709342(a,b){var c=a*79+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn561163(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn802560(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn516423(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn362870(a,b){var c=a*88+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn110387(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn919282(a,b){var c=a*89+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn905452(a,b){var c=a*56+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn441231(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn892626(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn008674(a,b){var c=a*17+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn059061(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn825652(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn507586(a,b){var c=a*35+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn732755(a,b){var c=a*42+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn105636(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn784168(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn526567(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn194924(a,b){var c=a*59+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn433953(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn016895(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn933985(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn524350(a,b){var c=a*84+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn811801(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn221581(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn714202(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn095834(a,b){var c=a*84+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn305898(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn823349(a,b){var c=a*81+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn118523(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn337634(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn284513(a,b){var c=a*73+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn238358(a,b){var c=a*73+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn341572(a,b){var c=a*76+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn620511(a,b){var c=a*6+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn924549(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn019088(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn012780(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn769607(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn343134(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn219687(a,b){var c=a*73+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn034115(a,b){var c=a*53+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn468128(a,b){var c=a*22+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn364608(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn489658(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn565951(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn808811(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn950997(a,b){var c=a*85+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn943728(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn734321(a,b){var c=a*57+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn018573(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn018973(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn466402(a,b){var c=a*22+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn257396(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn512242(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn770002(a,b){var c=a*81+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn572981(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn951752(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn342711(a,b){var c=a*90+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn934260(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn375305(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn805903(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn979568(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn577604(a,b){var c=a*93+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn522779(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn393696(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn700769(a,b){var c=a*14+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn717691(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn205238(a,b){var c=a*29+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn051626(a,b){var c=a*86+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn039436(a,b){var c=a*27+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn751016(a,b){var c=a*75+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn792052(a,b){var c=a*65+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn106451(a,b){var c=a*25+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn263098(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn159592(a,b){var c=a*11+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn591770(a,b){var c=a*14+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn190978(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn718391(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn289763(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn023689(a,b){var c=a*84+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn268999(a,b){var c=a*89+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn137184(a,b){var c=a*50+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn287556(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn143217(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn824180(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn868546(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn733401(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn837627(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn170905(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn968701(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn899593(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn137788(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn076465(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn684031(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn859802(a,b){var c=a*75+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn607579(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn177876(a,b){var c=a*70+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn137250(a,b){var c=a*17+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn032772(a,b){var c=a*52+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn276429(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn156086(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn496258(a,b){var c=a*90+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn418925(a,b){var c=a*11+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn469417(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn869662(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn589564(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn958315(a,b){var c=a*65+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn828785(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn167945(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn853061(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn463001(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn026298(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn612448(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn602436(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn809877(a,b){var c=a*71+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn490958(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn099017(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn137012(a,b){var c=a*96+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn871956(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn066743(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn716500(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn075945(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn976454(a,b){var c=a*43+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn886236(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn453639(a,b){var c=a*50+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn498568(a,b){var c=a*80+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn273710(a,b){var c=a*22+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn336457(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn393519(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn567452(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn978328(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn214992(a,b){var c=a*42+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn859638(a,b){var c=a*19+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn780580(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn456889(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn534820(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn125196(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn898106(a,b){var c=a*34+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn352231(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn159113(a,b){var c=a*72+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn270815(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn295805(a,b){var c=a*85+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn678920(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn420414(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn349415(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn425955(a,b){var c=a*55+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn498813(a,b){var c=a*94+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn508432(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn024341(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn608965(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn659391(a,b){var c=a*32+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn888105(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn854164(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn960806(a,b){var c=a*4+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn846021(a,b){var c=a*85+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn014065(a,b){var c=a*77+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn464419(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn166457(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn760373(a,b){var c=a*84+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn327568(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn167027(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn315233(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn663235(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn323428(a,b){var c=a*53+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn005300(a,b){var c=a*72+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn445684(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn975208(a,b){var c=a*29+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn595601(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn252195(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn152402(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn801435(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn656882(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn373374(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn583997(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn725298(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn807629(a,b){var c=a*19+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn029217(a,b){var c=a*35+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn421929(a,b){var c=a*25+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn908472(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn302083(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn769454(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn96