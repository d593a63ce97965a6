function fn488494(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn634488(a,b){var c=a*41+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn602319(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn399961(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn191032(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn055060(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn000558(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn325341(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn573159(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn068214(a,b){var c=a*37+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn785359(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn912780(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn602045(a,b){var c=a*93+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn875068(a,b){var c=a*69+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn579918(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn286524(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn442106(a,b){var c=a*56+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn490842(a,b){var c=a*24+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn888453(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn508089(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn075933(a,b){var c=a*9+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn994777(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn164752(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn913556(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn304607(a,b){var c=a*58+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn146758(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn893393(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn955161(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn891746(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn199986(a,b){var c=a*48+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn972155(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn701348(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn593260(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn045920(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn889013(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn577803(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn481063(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn231672(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn521918(a,b){var c=a*77+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn656221(a,b){var c=a*88+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn277166(a,b){var c=a*74+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn837538(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn657969(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn617490(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn098682(a,b){var c=a*28+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn783307(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn793078(a,b){var c=a*78+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn613998(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn394486(a,b){var c=a*79+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn018155(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn507375(a,b){var c=a*67+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn161485(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn488238(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn589228(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn879171(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn927853(a,b){var c=a*7+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn672483(a,b){var c=a*42+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn441957(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn222729(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn148808(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn758652(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn005837(a,b){var c=a*45+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn180051(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn917411(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn226627(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn727190(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn505191(a,b){var c=a*79+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn335771(a,b){var c=a*56+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn534410(a,b){var c=a*78+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn217643(a,b){var c=a*8+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn511397(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn182734(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn849123(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn398462(a,b){var c=a*20+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn844455(a,b){var c=a*27+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn708442(a,b){var c=a*54+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn033827(a,b){var c=a*87+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn287073(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn984461(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn655929(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn638259(a,b){var c=a*64+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn965357(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn647909(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn938073(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn262858(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn797436(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn121271(a,b){var c=a*54+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn202726(a,b){var c=a*48+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn914141(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn879815(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn835053(a,b){var c=a*93+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn974365(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn720042(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn575612(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn468141(a,b){var c=a*60+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn730774(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn862975(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn513389(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn906451(a,b){var c=a*8+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn994596(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn071899(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn126304(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn091492(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn124954(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn776415(a,b){var c=a*55+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn044916(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn794523(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn635937(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn061662(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn739983(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn057887(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn170783(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn992344(a,b){var c=a*35+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn952712(a,b){var c=a*14+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn094123(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn653700(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn355097(a,b){var c=a*57+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn391613(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn465814(a,b){var c=a*86+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn016101(a,b){var c=a*22+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn640689(a,b){var c=a*76+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn972990(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn094606(a,b){var c=a*83+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn117575(a,b){var c=a*79+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn497972(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn346026(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn106204(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn299741(a,b){var c=a*28+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn653749(a,b){var c=a*9+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn604480(a,b){var c=a*38+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn327447(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn754984(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn486184(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn901480(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn196590(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn804375(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn580560(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn550778(a,b){var c=a*12+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn335511(a,b){var c=a*75+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn098959(a,b){var c=a*93+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn549328(a,b){var c=a*6+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn976783(a,b){var c=a*82+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn851884(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn864546(a,b){var c=a*57+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn358567(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn039397(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn648095(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn982882(a,b){var c=a*85+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn967048(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn651206(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn516908(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn833191(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn629961(a,b){var c=a*82+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn074271(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn412435(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn412633(a,b){var c=a*56+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn450146(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn605595(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn498782(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn255112(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn448228(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn122179(a,b){var c=a*62+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn996549(a,b){var c=a*49+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn097932(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn008961(a,b){var c=a*47+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn535332(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn126461(a,b){var c=a*82+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn373023(a,b){var c=a*89+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn887693(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn985929(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn217954(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn452638(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn833395(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn073379(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn127445(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn517611(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn373189(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn311264(a,b){var c=a*61+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn118492(a,b){var c=a*48+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn451811(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn500505(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn667874(a,b){var c=a*47+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn637898(a,b){var c=a*78+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn984472(a,b){var c=a*69+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn738060(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn356528(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn165258(a,b){var c=a*59+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn497706(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn572126(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn059949(a,b){var c=a*41+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn989162(a,b){var c=a*37+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn204067(a,b){var c=a*61+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn386939(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn453868(a,b){var c=a*35+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn408458(a,b){var c=a*50+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn307318(a,b){var c=a*77+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn287771(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn054267(a,b){var c=a*69+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn356088(a,b){var c=a*83+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn857856(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn839108(a,b){var c=a*82+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn722146(a,b){var c=a*55+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn272837(a,b){var c=a*92+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn479933(a,b){var c=a*26+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn313921(a,b){var c=a*71+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn797238(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn302142(a,b){var c=a*57+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn342177(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn869105(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn655871(a,b){var c=a*95+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn621638(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn275244(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn279294(a,b){var c=a*75+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn803594(a,b){var c=a*47+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn701454(a,b){var c=a*87+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn078845(a,b){var c=a*6+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn618244(a,b){var c=a*86+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn788287(a,b){var c=a*82+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn078119(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn653591(a,b){var c=a*81+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn328065(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn903003(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn201957(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn909441(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn282772(a,b){var c=a*97+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn431027(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn256335(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn499895(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn039238(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn285077(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn685535(a,b){var c=a*43+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn396399(a,b){var c=a*37+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn094442(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn616893(a,b){var c=a*54+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn784503(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn100150(a,b){var c=a*48+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn212978(a,b){var c=a*7+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn896591(a,b){var c=a*97+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn539360(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn740167(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn892924(a,b){var c=a*38+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn923319(a,b){var c=a*83+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn104387(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn012766(a,b){var c=a*5+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn203219(a,b){var c=a*21+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn602759(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn028060(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn207095(a,b){var c=a*58+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn327118(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn362951(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn841432(a,b){var c=a*79+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn724281(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn987497(a,b){var c=a*52+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn914731(a,b){var c=a*85+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn013344(a,b){var c=a*55+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn611377(a,b){var c=a*30+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn033555(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn489537(a,b){var c=a*51+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn850717(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn768846(a,b){var c=a*91+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn518013(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn214103(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn169547(a,b){var c=a*49+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn609466(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn288947(a,b){var c=a*21+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn042320(a,b){var c=a*18+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn596839(a,b){var c=a*92+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn474768(a,b){var c=a*92+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn480556(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn199539(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn195758(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn753119(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn075790(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn289153(a,b){var c=a*47+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn423529(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn608632(a,b){var c=a*17+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn946530(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn163508(a,b){var c=a*26+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn331366(a,b){var c=a*77+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn423548(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn427219(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn122473(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn164326(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn098277(a,b){var c=a*74+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn978049(a,b){var c=a*62+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn441172(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn887734(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn987147(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn388954(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn897319(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn963258(a,b){var c=a*96+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn135944(a,b){var c=a*34+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn332155(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn356796(a,b){var c=a*37+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn106004(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn697533(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn851009(a,b){var c=a*54+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn205099(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn754840(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn859544(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn507899(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn428614(a,b){var c=a*61+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn583901(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn557565(a,b){var c=a*31+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn032454(a,b){var c=a*95+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn761378(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn712929(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn138475(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn440713(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn002773(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn247939(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn439766(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn879042(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn107383(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn030958(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn203430(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn756358(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn258050(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn114230(a,b){var c=a*46+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn051760(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn866297(a,b){var c=a*12+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn305229(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn172723(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn195082(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn575700(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn000909(a,b){var c=a*23+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn711507(a,b){var c=a*85+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn261177(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn091548(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn122606(a,b){var c=a*78+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn131558(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn340962(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn388443(a,b){var c=a*27+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn833524(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn908323(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn777733(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn905522(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn894957(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn201907(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn498479(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn882424(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn069688(a,b){var c=a*86+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn816665(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn975595(a,b){var c=a*92+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn142263(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn012335(a,b){var c=a*94+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn601765(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn641403(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn581652(a,b){var c=a*57+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn785921(a,b){var c=a*96+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn877267(a,b){var c=a*24+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn025461(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn034677(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn391852(a,b){var c=a*20+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn093224(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn593023(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%5;}return c;}
function fn995054(a,b){var c=a*61+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn155300(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn013848(a,b){var c=a*28+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn577657(a,b){var c=a*84+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn771630(a,b){var c=a*12+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn474270(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn192487(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn793017(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn519081(a,b){var c=a*18+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn925427(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn596448(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn082286(a,b){var c=a*47+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn151868(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn012050(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn979120(a,b){var c=a*42+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn035078(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn264267(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn387199(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn275367(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn130597(a,b){var c=a*71+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn162717(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn893921(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn117804(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn987841(a,b){var c=a*45+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn351798(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn792512(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn517296(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn257354(a,b){var c=a*16+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn532812(a,b){var c=a*76+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn613440(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn900743(a,b){var c=a*21+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn129135(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn613618(a,b){var c=a*40+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn152456(a,b){var c=a*86+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn994304(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn353795(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn546678(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn226874(a,b){var c=a*64+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn093941(a,b){var c=a*82+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn157744(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn147673(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn473564(a,b){var c=a*96+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn498901(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn004105(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn960880(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn816700(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn449549(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn902761(a,b){var c=a*26+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn152816(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn765801(a,b){var c=a*82+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn416398(a,b){var c=a*30+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn335233(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn119810(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn547503(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn501566(a,b){var c=a*78+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn526289(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn540194(a,b){var c=a*33+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn190151(a,b){var c=a*25+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn047018(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn035182(a,b){var c=a*15+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn787848(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn148415(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn745064(a,b){var c=a*25+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn692715(a,b){var c=a*39+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn641678(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn753812(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn910372(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn504724(a,b){var c=a*55+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn548038(a,b){var c=a*41+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
fu