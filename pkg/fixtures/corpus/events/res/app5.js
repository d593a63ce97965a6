function fn833656(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn758655(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn687590(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn499937(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn001064(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn810357(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn170536(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn477629(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn438021(a,b){var c=a*86+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn583118(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn152580(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn203353(a,b){var c=a*27+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn348966(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn812166(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn392143(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn118889(a,b){var c=a*42+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn307495(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn489402(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn441018(a,b){var c=a*43+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn581489(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn900511(a,b){var c=a*35+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn447016(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn912105(a,b){var c=a*42+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn916906(a,b){var c=a*22+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn682864(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn376793(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn392309(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn889713(a,b){var c=a*47+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn795574(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn601601(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn003509(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn245393(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn214018(a,b){var c=a*34+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn102548(a,b){var c=a*32+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn789694(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn173093(a,b){var c=a*39+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn510158(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn433672(a,b){var c=a*62+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn672613(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn825060(a,b){var c=a*92+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn783127(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn724001(a,b){var c=a*4+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn061349(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn351292(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn551889(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn297329(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn576433(a,b){var c=a*35+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn675543(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn469668(a,b){var c=a*87+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn769737(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn687840(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn934659(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn395062(a,b){var c=a*29+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn410206(a,b){var c=a*83+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn196874(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn412276(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn381937(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn761823(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn972507(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn268342(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn912364(a,b){var c=a*95+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn417182(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn042872(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn379537(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn649301(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn209720(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn676929(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn249837(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn826062(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn804576(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn241685(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn606692(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn025935(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn126538(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn063938(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn566063(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn546260(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn030328(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn122843(a,b){var c=a*7+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn917503(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn774094(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn002047(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn594128(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn063159(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn097783(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn256487(a,b){var c=a*45+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn807926(a,b){var c=a*97+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn296990(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn958094(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn676946(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn612096(a,b){var c=a*58+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn435169(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn399202(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn344421(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn238823(a,b){var c=a*16+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn332757(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn821996(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn778665(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn211470(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn934663(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn583634(a,b){var c=a*86+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn854591(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn896241(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn219785(a,b){var c=a*93+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn930458(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn045537(a,b){var c=a*70+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn456520(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn160725(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn572424(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn264075(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn642402(a,b){var c=a*10+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn157538(a,b){var c=a*70+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn998759(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn410258(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn813671(a,b){var c=a*95+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn114820(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn276331(a,b){var c=a*15+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn913491(a,b){var c=a*96+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn209381(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn638338(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn581834(a,b){var c=a*52+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn538382(a,b){var c=a*91+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn320639(a,b){var c=a*44+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn450090(a,b){var c=a*24+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn104966(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn568607(a,b){var c=a*82+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn995640(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn896782(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn650793(a,b){var c=a*36+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn381126(a,b){var c=a*85+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn677656(a,b){var c=a*9+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn027904(a,b){var c=a*19+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn269289(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn686458(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn747861(a,b){var c=a*79+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn183705(a,b){var c=a*43+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn132698(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn865648(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn451282(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn174480(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn715946(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn128437(a,b){var c=a*64+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn527367(a,b){var c=a*69+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn253104(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn086250(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn883794(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn638081(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn182692(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn735304(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn777618(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn317267(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn712769(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn629382(a,b){var c=a*4+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn959844(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn446295(a,b){var c=a*54+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn682881(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn913497(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn418609(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn177412(a,b){var c=a*50+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn323350(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn589459(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn574499(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn644358(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn699230(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn162376(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn481423(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn453323(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn165601(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn324601(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn039634(a,b){var c=a*4+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn804413(a,b){var c=a*35+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn456590(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn459374(a,b){var c=a*73+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn557142(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn098641(a,b){var c=a*97+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn553895(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn314477(a,b){var c=a*3+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn475516(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn686066(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn823839(a,b){var c=a*69+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn212008(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn994361(a,b){var c=a*9+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn708104(a,b){var c=a*55+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn092479(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn098093(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn750297(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn572823(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn988403(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn612307(a,b){var c=a*63+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn677187(a,b){var c=a*53+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn622983(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn717437(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn535624(a,b){var c=a*75+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn404635(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn792076(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn119288(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn982549(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn385938(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn354031(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn309710(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn237823(a,b){var c=a*13+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn978924(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn136640(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn332146(a,b){var c=a*60+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn198698(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn156735(a,b){var c=a*90+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn460941(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn841072(a,b){var c=a*96+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn414905(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn635400(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn514018(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn616583(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn954292(a,b){var c=a*2+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn734340(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn744270(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn017601(a,b){var c=a*63+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn676316(a,b){var c=a*48+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn189316(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn056056(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn958258(a,b){var c=a*35+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn921320(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn938466(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn392130(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn686365(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn382977(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn215449(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn086976(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn545517(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn508195(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn264029(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn965832(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn338885(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn510521(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn645627(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn582936(a,b){var c=a*45+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn765733(a,b){var c=a*12+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn120384(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn746099(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn609468(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn608406(a,b){var c=a*87+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn178402(a,b){var c=a*44+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn261933(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn115448(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn489609(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn439003(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn337358(a,b){var c=a*81+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn957250(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn755632(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn650982(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn321902(a,b){var c=a*81+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn117444(a,b){var c=a*85+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn870561(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn525507(a,b){var c=a*39+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn519127(a,b){var c=a*60+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn647736(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn652178(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn040529(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn168821(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn220310(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn991624(a,b){var c=a*48+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn800223(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn296547(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn139854(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn314527(a,b){var c=a*71+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn319329(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn208929(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn040551(a,b){var c=a*52+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn513470(a,b){var c=a*6+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn907420(a,b){var c=a*7+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn486600(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn356374(a,b){var c=a*88+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn988015(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn101751(a,b){var c=a*10+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn062199(a,b){var c=a*76+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn103666(a,b){var c=a*71+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn977140(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn891013(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn487411(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn116591(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn297846(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn311093(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn100074(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn533086(a,b){var c=a*8+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn826608(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn096057(a,b){var c=a*28+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn885161(a,b){var c=a*26+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn907883(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn416177(a,b){var c=a*29+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn083456(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn120054(a,b){var c=a*93+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn293647(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn852105(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn311075(a,b){var c=