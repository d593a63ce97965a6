function fn221204(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn182804(a,b){var c=a*38+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn702620(a,b){var c=a*97+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn146121(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn514070(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn087170(a,b){var c=a*48+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn193881(a,b){var c=a*97+b;for(var i=0;i<25;i++){c+=i%2;}return c;}
function fn264613(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn128196(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn077638(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn208613(a,b){var c=a*33+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn760746(a,b){var c=a*51+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn445568(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn067848(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn819136(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn022162(a,b){var c=a*48+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn015722(a,b){var c=a*28+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn983057(a,b){var c=a*70+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn056605(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn833782(a,b){var c=a*97+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn568516(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn707170(a,b){var c=a*66+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn978134(a,b){var c=a*50+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn907777(a,b){var c=a*46+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn426065(a,b){var c=a*17+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn220200(a,b){var c=a*26+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn302388(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn568354(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn215869(a,b){var c=a*68+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn742194(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn637160(a,b){var c=a*77+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn222061(a,b){var c=a*13+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn590569(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn769126(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn500995(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn335682(a,b){var c=a*48+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn765803(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn460465(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn595031(a,b){var c=a*6+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn132803(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn286944(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn292458(a,b){var c=a*87+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn570726(a,b){var c=a*71+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn427220(a,b){var c=a*84+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn358738(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn633760(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn462647(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn694180(a,b){var c=a*36+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn531156(a,b){var c=a*84+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn440524(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn186191(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn958187(a,b){var c=a*61+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn375677(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn784915(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn836501(a,b){var c=a*78+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn724395(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn943771(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn237296(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn946202(a,b){var c=a*35+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn284916(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn299446(a,b){var c=a*33+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn487937(a,b){var c=a*66+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn346957(a,b){var c=a*32+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn361047(a,b){var c=a*57+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn149300(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn973562(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn754301(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn126695(a,b){var c=a*60+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn342376(a,b){var c=a*89+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn833242(a,b){var c=a*46+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn390156(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn081001(a,b){var c=a*18+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn231390(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn741152(a,b){var c=a*62+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn145516(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn418722(a,b){var c=a*80+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn847913(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn809585(a,b){var c=a*21+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn585543(a,b){var c=a*23+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn941271(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn635670(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn596174(a,b){var c=a*46+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn078264(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn800253(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn602910(a,b){var c=a*67+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn734715(a,b){var c=a*15+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn703517(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn872942(a,b){var c=a*20+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn350091(a,b){var c=a*5+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn532003(a,b){var c=a*63+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn863532(a,b){var c=a*19+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn869113(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn469789(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn511227(a,b){var c=a*24+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn462535(a,b){var c=a*96+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn292597(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn642972(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn636043(a,b){var c=a*48+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn455807(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn692323(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn966471(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn841198(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn535455(a,b){var c=a*35+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn804084(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn803669(a,b){var c=a*25+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn960955(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn041867(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn777922(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn823530(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn055434(a,b){var c=a*14+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn162203(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn051848(a,b){var c=a*17+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn965350(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn503309(a,b){var c=a*82+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn489402(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn294508(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn881099(a,b){var c=a*94+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn029639(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn195931(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn861149(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn501293(a,b){var c=a*24+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn850483(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn492701(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn877483(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn181887(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn197939(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn377087(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn382523(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn773002(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn178962(a,b){var c=a*90+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn522919(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn228851(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn503459(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn112140(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn870190(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn647288(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn731414(a,b){var c=a*82+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn132701(a,b){var c=a*58+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn168282(a,b){var c=a*13+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn350155(a,b){var c=a*20+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn799812(a,b){var c=a*10+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn197718(a,b){var c=a*42+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn782393(a,b){var c=a*31+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn872163(a,b){var c=a*72+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn372451(a,b){var c=a*33+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn408225(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn190016(a,b){var c=a*90+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn366096(a,b){var c=a*85+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn978872(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn142490(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn234227(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn703149(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn019944(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn292335(a,b){var c=a*41+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn887361(a,b){var c=a*45+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn944639(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn486743(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn643759(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn330856(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn738568(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn398864(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn961927(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn562150(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn381070(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn486949(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn451803(a,b){var c=a*7+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn985613(a,b){var c=a*88+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn638638(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn305371(a,b){var c=a*92+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn536184(a,b){var c=a*20+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn920717(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn307431(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn094756(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn793534(a,b){var c=a*67+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn245783(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn843662(a,b){var c=a*81+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn224780(a,b){var c=a*17+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn459102(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn277945(a,b){var c=a*85+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn200757(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn533281(a,b){var c=a*15+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn800814(a,b){var c=a*94+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn429289(a,b){var c=a*29+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn082600(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn663328(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn314511(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn218770(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn079362(a,b){var c=a*12+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn733872(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn767842(a,b){var c=a*44+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn384417(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn663019(a,b){var c=a*41+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn887293(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn598033(a,b){var c=a*29+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn710508(a,b){var c=a*91+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn876476(a,b){var c=a*96+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn748607(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn931414(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn883909(a,b){var c=a*67+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn784220(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn456028(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn088530(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn759329(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn837877(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn240013(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn045499(a,b){var c=a*50+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn001030(a,b){var c=a*30+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn211457(a,b){var c=a*15+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn677654(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn603588(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn138911(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn032270(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn807406(a,b){var c=a*39+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn150506(a,b){var c=a*74+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn197134(a,b){var c=a*75+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn484068(a,b){var c=a*68+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn806498(a,b){var c=a*62+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn664890(a,b){var c=a*70+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn524380(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn705997(a,b){var c=a*30+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn028469(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn171886(a,b){var c=a*44+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn209271(a,b){var c=a*58+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn253257(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn133507(a,b){var c=a*73+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn862449(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn837221(a,b){var c=a*71+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn876326(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn295646(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn509679(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn914539(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn106363(a,b){var c=a*72+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn607670(a,b){var c=a*36+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn879635(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn974240(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn918312(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn726729(a,b){var c=a*35+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn201264(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn368735(a,b){var c=a*67+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn338047(a,b){var c=a*46+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn721271(a,b){var c=a*31+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn334885(a,b){var c=a*72+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn228452(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn423018(a,b){var c=a*2+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn158922(a,b){var c=a*31+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn227954(a,b){var c=a*63+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn460622(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn198762(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn430601(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn304946(a,b){var c=a*51+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn891092(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn010633(a,b){var c=a*33+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn758511(a,b){var c=a*74+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn774348(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn097540(a,b){var c=a*28+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn881737(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn452790(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn818517(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn018747(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn768174(a,b){var c=a*22+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn731507(a,b){var c=a*25+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn615222(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn262540(a,b){var c=a*22+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn162653(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn479052(a,b){var c=a*49+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn948932(a,b){var c=a*23+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn438021(a,b){var c=a*68+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn555298(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn581790(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn854609(a,b){var c=a*41+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn369031(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn479203(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn171303(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn337785(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn192937(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn700005(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn713737(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn506711(a,b){var c=a*55+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn216605(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn383391(a,b){var c=a*61+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn251255(a,b){var c=a*3+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn142021(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn739436(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn033730(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn975473(a,b){var c=a*20+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn093360(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn072725(a,b){var c=a*64+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn729510(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn172208(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn418548(a,b){var c=a*59+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn265334(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn139999(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn575509(a,b){var c=a*57+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn545944(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn264097(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn715411(a,b){var c=a*89+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn282277(a,b){var c=a*64+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn627969(a,b){var c=a*56+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn131965(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn242083(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn114866(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn718286(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn161629(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn140749(a,b){var c=a*26+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn284495(a,b){var c=a*74+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn733594(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn581312(a,b){var c=a*45+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn573458(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn035919(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn755309(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn148568(a,b){var c=a*40+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn264931(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn644494(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn664602(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn154862(a,b){var c=a*30+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn988200(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn635871(a,b){var c=a*50+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn027382(a,b){var c=a*16+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn894241(a,b){var c=a*70+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn143622(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn958826(a,b){var c=a*18+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn411547(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn003558(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn343381(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn965898(a,b){var c=a*29+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn770216(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn931902(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn671622(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn811238(a,b){var c=a*86+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn514161(a,b){var c=a*87+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn416651(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn482906(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn328143(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn610255(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn352923(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn422778(a,b){var c=a*23+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn188872(a,b){var c=a*56+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn488993(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn964344(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn460504(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn128568(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn807588(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn758085(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn428478(a,b){var c=a*53+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn319817(a,b){var c=a*36+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn660253(a,b){var c=a*38+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn903250(a,b){var c=a*8+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn582843(a,b){var c=a*94+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn853012(a,b){var c=a*58+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn611815(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn022775(a,b){var c=a*76+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn779230(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn662523(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn418658(a,b){var c=a*55+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn562784(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn067705(a,b){var c=a*77+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn555986(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn803635(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn046766(a,b){var c=a*2+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn774058(a,b){var c=a*38+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn711795(a,b){var c=a*91+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn371683(a,b){var c=a*92+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn154766(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn645310(a,b){var c=a*21+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn624715(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn182396(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn760956(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn645015(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn256796(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn867267(a,b){var c=a*59+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn760837(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn862513(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn457919(a,b){var c=a*82+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn087508(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn301875(a,b){var c=a*31+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn274774(a,b){var c=a*89+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn463042(a,b){var c=a*67+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn262279(a,b){var c=a*50+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn352482(a,b){var c=a*68+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn477633(a,b){var c=a*17+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn662466(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn333570(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn360207(a,b){var c=a*31+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn759059(a,b){var c=a*49+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn543019(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn753713(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn165067(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn476149(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn062976(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn236169(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn707516(a,b){var c=a*31+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn364810(a,b){var c=a*60+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn240753(a,b){var c=a*96+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn158135(a,b){var c=a*80+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn112473(a,b){var c=a*87+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn101708(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn755343(a,b){var c=a*35+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn143917(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn517307(a,b){var c=a*53+b;for(var i=0;i<5;i++){c+