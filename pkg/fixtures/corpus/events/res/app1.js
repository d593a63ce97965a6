function fn178480(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn385980(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn422762(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn872834(a,b){var c=a*79+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn841239(a,b){var c=a*95+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn255406(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn307155(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn557518(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn070925(a,b){var c=a*49+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn446782(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn673443(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn029997(a,b){var c=a*76+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn108178(a,b){var c=a*19+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn049421(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn218183(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn023362(a,b){var c=a*59+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn503792(a,b){var c=a*31+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn243288(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn785305(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn086781(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn795347(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn988097(a,b){var c=a*53+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn923116(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn661992(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn526682(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn822985(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn217301(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn204264(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn356662(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn831288(a,b){var c=a*6+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn617309(a,b){var c=a*26+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn432386(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn367041(a,b){var c=a*74+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn191832(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn455134(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn070526(a,b){var c=a*49+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn678085(a,b){var c=a*73+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn091849(a,b){var c=a*77+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn099397(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn852307(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn094476(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn138156(a,b){var c=a*56+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn685896(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn825311(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn271525(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn100220(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn431541(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn741763(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn775864(a,b){var c=a*42+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn653697(a,b){var c=a*85+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn357118(a,b){var c=a*96+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn890221(a,b){var c=a*9+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn136357(a,b){var c=a*12+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn627871(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn195402(a,b){var c=a*32+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn341488(a,b){var c=a*90+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn699122(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn946558(a,b){var c=a*76+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn561258(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn521366(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn748913(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn663585(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn430276(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn765315(a,b){var c=a*65+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn932388(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn847089(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn613424(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn240468(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn419972(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn029739(a,b){var c=a*30+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn847795(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn210659(a,b){var c=a*51+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn763724(a,b){var c=a*92+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn881278(a,b){var c=a*38+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn004520(a,b){var c=a*52+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn042730(a,b){var c=a*24+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn129173(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn543637(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn672514(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn906163(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn756467(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn268017(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn728511(a,b){var c=a*34+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn035369(a,b){var c=a*87+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn723015(a,b){var c=a*72+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn403083(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn510334(a,b){var c=a*4+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn027453(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn291583(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn292538(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn417576(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn994417(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn788762(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn770104(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn173400(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn450846(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn344654(a,b){var c=a*18+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn466191(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn669117(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn142955(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn957222(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn918537(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn129695(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn159427(a,b){var c=a*65+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn473617(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn206871(a,b){var c=a*22+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn944778(a,b){var c=a*74+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn865153(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn472268(a,b){var c=a*2+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn996488(a,b){var c=a*77+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn082615(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn541239(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn207731(a,b){var c=a*49+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn823748(a,b){var c=a*28+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn517243(a,b){var c=a*2+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn922643(a,b){var c=a*91+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn943723(a,b){var c=a*69+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn910855(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn482277(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn117441(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn748985(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn760814(a,b){var c=a*89+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn609281(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn305566(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn147597(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn397709(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn661146(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn164472(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn533567(a,b){var c=a*10+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn762876(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn660109(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn788980(a,b){var c=a*41+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn758718(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn653440(a,b){var c=a*26+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn444973(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn506494(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn441518(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn199372(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn351522(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn486777(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn469842(a,b){var c=a*8+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn457785(a,b){var c=a*13+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn441033(a,b){var c=a*64+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn469818(a,b){var c=a*27+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn630715(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn553271(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn784242(a,b){var c=a*15+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn442872(a,b){var c=a*52+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn114675(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn098242(a,b){var c=a*72+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn034494(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn739412(a,b){var c=a*58+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn826536(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn636211(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn742365(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn767880(a,b){var c=a*97+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn544241(a,b){var c=a*38+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn575542(a,b){var c=a*87+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn396601(a,b){var c=a*71+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn936735(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn480666(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn091055(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn007192(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn950346(a,b){var c=a*71+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn784906(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn664547(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn882115(a,b){var c=a*76+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn075636(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn250586(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn975207(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn177306(a,b){var c=a*48+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn348510(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn592806(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn716420(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn761610(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn708750(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn111403(a,b){var c=a*70+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn754052(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn432140(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn330962(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn268038(a,b){var c=a*48+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn119248(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn749514(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn376638(a,b){var c=a*22+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn848410(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn645440(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn117937(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn768993(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn982483(a,b){var c=a*77+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn283394(a,b){var c=a*42+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn089054(a,b){var c=a*69+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn752410(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn595979(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn823455(a,b){var c=a*66+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn160345(a,b){var c=a*33+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn112761(a,b){var c=a*34+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn519748(a,b){var c=a*75+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn146544(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn158595(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn851706(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn822357(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn918124(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn235590(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn584833(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn986038(a,b){var c=a*58+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn514867(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn871828(a,b){var c=a*60+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn201847(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn108568(a,b){var c=a*13+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn205347(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn798539(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn192667(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn019718(a,b){var c=a*39+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn475517(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn480086(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn648141(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn151092(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn197004(a,b){var c=a*66+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn397119(a,b){var c=a*93+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn404142(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn766911(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn328245(a,b){var c=a*32+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn255303(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn348015(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn259146(a,b){var c=a*69+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn919868(a,b){var c=a*14+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn991749(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn436434(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn517099(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn332419(a,b){var c=a*14+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn395439(a,b){var c=a*70+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn670669(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn793055(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn486476(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn122757(a,b){var c=a*88+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn611800(a,b){var c=a*62+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn142304(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn064706(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn329186(a,b){var c=a*10+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn922980(a,b){var c=a*49+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn471706(a,b){var c=a*65+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn030766(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn490441(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn570295(a,b){var c=a*72+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn426094(a,b){var c=a*73+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn865753(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn769944(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn976481(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn083398(a,b){var c=a*38+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn014160(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn084216(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn353178(a,b){var c=a*21+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn365701(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn954688(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn710464(a,b){var c=a*17+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn502651(a,b){var c=a*13+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn546334(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn217560(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn089504(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn747372(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn499881(a,b){var c=a*67+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn137195(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn281265(a,b){var c=a*57+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn322386(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn522906(a,b){var c=a*6+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn354889(a,b){var c=a*56+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn209860(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn460163(a,b){var c=a*46+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn787985(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn663673(a,b){var c=a*71+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn546225(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn439282(a,b){var c=a*37+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn738172(a,b){var c=a*37+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn795936(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn729252(a,b){var c=a*68+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn183881(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn398546(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn230719(a,b){var c=a*63+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn936302(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn969889(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn127008(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn077831(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn513283(a,b){var c=a*61+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn849901(a,b){var c=a*79+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn905063(a,b){var c=a*76+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn123456(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn192015(a,b){var c=a*14+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn553555(a,b){var c=a*9+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn249223(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn461347(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn558335(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn120644(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn704088(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn912060(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn921981(a,b){var c=a*62+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn019816(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn694595(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn596385(a,b){var c=a*84+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn093979(a,b){var c=a*97+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn658653(a,b){var c=a*38+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn277358(a,b){var c=a*15+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn832596(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn078674(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn068809(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn952864(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn378867(a,b){var c=a*61+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn639327(a,b){var c=a*10+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn478300(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn468513(a,b){var c=a*87+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn842584(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn554182(a,b){var c=a*45+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn834165(a,b){var c=a*65+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn934207(a,b){var c=a*21+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn749377(a,b){var c=a*91+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn174169(a,b){var c=a*92+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn934544(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn608145(a,b){var c=a*86+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn256528(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn602030(a,b){var c=a*38+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn030392(a,b){var c=a*71+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn626280(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn621329(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn327743(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn738717(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn917745(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn603297(a,b){var c=a*35+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn354240(a,b){var c=a*34+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn742260(a,b){var c=a*27+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn427761(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn327044(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn554814(a,b){var c=a*96+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn035879(a,b){var c=a*59+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn622671(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn135337(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn217362(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn432518(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn040326(a,b){var c=a*94+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn206709(a,b){var c=a*16+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn111091(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn914989(a,b){var c=a*13+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn792166(a,b){var c=a*19+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn367122(a,b){var c=a*14+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn825752(a,b){var c=a*89+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn992946(a,b){var c=a*94+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn254071(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn643431(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn342893(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn999230(a,b){var c=a*27+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn177327(a,b){var c=a*79+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn877155(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn640814(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn282548(a,b){var c=a*16+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn727112(a,b){var c=a*50+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn649255(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn845629(a,b){var c=a*11+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn692498(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn259876(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn015820(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn110500(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn612795(a,b){var c=a*72+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn503383(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn663649(a,b){var c=a*8+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn158917(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn989280(a,b){var c=a*81+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn256944(a,b){var c=a*13+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn224046(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn389634(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn725827(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn501571(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn059691(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn197125(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn500400(a,b){var c=a*37+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn947994(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn948432(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn133457(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn797475(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn700788(a,b){var c=a*2+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn516210(a,b){var c=a*18+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn276108(a,b){var c=a*93+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn011124(a,b){var c=a*65+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn494629(a,b){var c=a*15+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn014423(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn821429(a,b){var c=a*30+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn110094(a,b){var c=a*44+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn636135(a,b){var c=a*28+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn204132(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn187146(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn857992(a,b){var c=a*44+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn281829(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn421246(a,b){var c=a*72+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn633689(a,b){var c=a*52+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn041812(a,b){var c=a*4+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn481758(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn875710(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn315470(a,b){var c=a*83+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn827564(a,b){var c=a*28+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn694856(a,b){var c=a*24+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn602333(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn308671(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn163512(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn586366(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn302562(a,b){var c=a*64+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn155270(a,b){var c=a*24+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn941127(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn624274(a,b){var c=a*54+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn535332(a,b){var c=a*68+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn207791(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn188878(a,b){var c=a*51+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn560977(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn061133(a,b){var c=a*75+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn979641(a,b){var c=a*7+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn364945(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn980226(a,b){var c=a*35+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn412749(a,b){var c=a*47+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn560571(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn166941(a,b){var c=a*76+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn948128(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn190150(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn181169(a,b){var c=a*80+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn643036(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn283987(a,b){var c=a*55+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn075613(a,b){var c=a*32+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn931955(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn150900(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn106784(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn545228(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn615087(a,b){var c=a*59+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn298797(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn040536(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn867469(a,b){var c=a*78+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn529954(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn269516(a,b){var c=a*34+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn606159(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn606436(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn812770(a,b){var c=a*79+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn042960(a,b){var c=a*56+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn514413(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn021631(a,b){var c=a*5+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn403826(a,b){var c=a*90+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn998010(a,b){var c=a*90+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn147220(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn114059(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn716868(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn909779(a,b){var c=a*41+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn821427(a,b){var c=a*95+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn819330(a,b){var c=a*22+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn889723(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn688742(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn173821(a,b){var c=a*61+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn410580(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn718116(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn638962(a,b){var c=a*15+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn063868(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn536604(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn087082(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn553217(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn535077(a,b){var c=a*63+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn984051(a,b){var c=a*80+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn960727(a,b){var c=a*17+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn455987(a,b){var c=a*8+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn226906(a,b){var c=a*26+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn847071(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn818482(a,b){var c=a*89+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn894361(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn424132(a,b){var c=a*65+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn555174(a,b){var c=a*38+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn466402(a,b){var c=a*68+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn283855(a,b){var c=a*65+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn672407(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn008153(a,b){var c=a*50+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn509031(a,b){var c=a*22+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn778169(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn612993(a,b){var c=a*41+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn391204(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn694778(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn151105(a,b){var c=a*24+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn753192(a,b){var c=a*50+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn911184(a,b){var c=a*93+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn663804(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn174085(a,b){var c=a*57+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn646724(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn726737(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn275604(a,b){var c=a*30+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn303594(a,b){var c=a*38+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn712951(a,b){var c=a*47+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn356480(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn016145(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn021102(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn078793(a,b){var c=a*47+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn370282(a,b){var c=a*97+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn487061(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn219280(a,b){var c=a*39+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn831172(a,b){var c=a*70+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn551602(a,b){var c=a*11+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn771966(a,b){var c=a*65+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn221784(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn161763(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn921041(a,b){var c=a*86+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn174487(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn973643(a,b){var c=a*59+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn468353(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn305019(a,b){var c=a*28+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn670259(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn711388(a,b){var c=a*54+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn926368(a,b){var c=a*25+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn581058(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn859353(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn848439(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn401299(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn125176(a,b){var c=a*14+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn676629(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn731242(a,b){var c=a*59+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn823312(a,b){var c=a*14+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn466638(a,b){var c=a*34+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn482240(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn065965(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn777106(a,b){var c=a*44+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn861500(a,b){var c=a*14+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn638330(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn271626(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn874111(a,b){var c=a*18+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn823095(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn534118(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn266058(a,b){var c=a*78+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn204478(a,b){var c=a*2+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn654700(a,b){var c=a*8+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn168370(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn827653(a,b){var c=a*16+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn948102(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn282065(a,b){var c=a*65+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn962432(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn162846(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn576629(a,b){var c=a*89+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn594247(a,b){var c=a*35+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn494454(a,b){var c=a*38+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn439871(a,b){var c=a*6+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn938885(a,b){var c=a*39+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn771341(a,b){var c=a*19+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn802938(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn757811(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn468357(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn246036(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn763236(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn716599(a,b){var c=a*15+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn039485(a,b){var c=a*18+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn055459(a,b){var c=a*52+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn356630(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn606625(a,b){var c=a*93+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn731964(a,b){var c=a*10+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn828190(a,b){var c=a*39+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn843445(a,b){var c=a*68+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn917776(a,b){var c=a*33+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn745072(a,b){var c=a*49+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn275655(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn311757(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn273477(a,b){var c=a*46+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn275360(a,b){var c=a*45+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn849715(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn162153(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn639119(a,b){var c=a*40+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn266263(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn606758(a,b){var c=a*14+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn306178(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn593482(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn029581(a,b){var c=a*40+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn575313(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn115789(a,b){var c=a*31+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn282469(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn770488(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn923016(a,b){var c=a*2+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn440446(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn547137(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn651996(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn314383(a,b){var c=a*54+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn409407(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn128238(a,b){var c=a*50+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn991463(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn501293(a,b){var c=a*43+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn679219(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn640654(a,b){var c=a*18+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn021275(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn854827(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn520774(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn724274(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn386584(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn531072(a,b){var c=a*60+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn924327(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn684698(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn944699(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn196062(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn900644(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn441196(a,b){var c=a*86+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn405244(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn984226(a,b){var c=a*64+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn119669(a,b){var c=a*27+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn757792(a,b){var c=a*6+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn494681(a,b){var c=a*95+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn768027(a,b){var c=a*7+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn703891(a,b){var c=a*94+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn125461(a,b){var c=a*23+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn458462(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn252301(a,b){var c=a*41+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn382689(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn230692(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn622687(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn856522(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn863261(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn722244(a,b){var c=a*68+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn598813(a,b){var c=a*73+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn430559(a,b){var c=a*12+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn691269(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn757738(a,b){var c=a*10+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn970528(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn917431(a,b){var c=a*77+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn031094(a,b){var c=a*37+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn234504(a,b){var c=a*72+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn456574(a,b){var c=a*62+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn634596(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn930170(a,b){var c=a*56+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn952310(a,b){var c=a*24+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn068183(a,b){var c=a*69+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn269675(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn012687(a,b){var c=a*89+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn028636(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn103136(a,b){var c=a*41+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn071423(a,b){var c=a*94+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn015450(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn269528(a,b){var c=a*73+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn363447(a,b){var c=a*50+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn399236(a,b){var c=a*82+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn995016(a,b){var c=a*61+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn152962(a,b){var c=a*65+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn526804(a,b){var c=a*49+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn690476(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn273205(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn643969(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn038774(a,b){var c=a*8+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn575608(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn749843(a,b){var c=a*10+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn787515(a,b){var c=a*61+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn117818(a,b){var c=a*7+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn671619(a,b){var c=a*32+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn067195(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn133384(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn676831(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn241271(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn083785(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn442078(a,b){var c=a*21+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn533877(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn528891(a,b){var c=a*33+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn500244(a,b){var c=a*49+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn513843(a,b){var c=a*59+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn904590(a,b){var c=a*47+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn001501(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn473815(a,b){var c=a*2+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn078343(a,b){var c=a*24+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn594860(a,b){var c=a*18+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn737009(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn109323(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn065749(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn828552(a,b){var c=a*53+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn890305(a,b){var c=a*59+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn217428(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn514060(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn346361(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn217979(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn931315(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn685193(a,b){var c=a*75+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn589327(a,b){var c=a*49+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn144507(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn725340(a,b){var c=a*40+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn040973(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn128546(a,b){var c=a*94+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn933782(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn417835(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn596490(a,b){var c=a*36+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn550244(a,b){var c=a*43+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn187217(a,b){var c=a*19+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn991685(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn085700(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn801219(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn832166(a,b){var c=a*22+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn527230(a,b){var c=a*58+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn842355(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%4;}return c;}
function fn065795(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn481546(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn458160(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn580885(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%13;}return c;}
function fn321295(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn833936(a,b){var c=a*84+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn198883(a,b){var c=a*18+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn433597(a,b){var c=a*17+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn660762(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn523937(a,b){var c=a*8+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn538557(a,b){var c=a*20+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn304848(a,b){var c=a*50+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn254016(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn921537(a,b){var c=a*44+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn565909(a,b){var c=a*14+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn314242(a,b){var c=a*86+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn127595(a,b){var c=a*29+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn861911(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn798366(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn708643(a,b){var c=a*37+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn996069(a,b){var c=a*27+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn132145(a,b){var c=a*62+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn783828(a,b){var c=a*64+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn407060(a,b){var c=a*32+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn166361(a,b){var c=a*71+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn872929(a,b){var c=a*57+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn123053(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn706650(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn148195(a,b){var c=a*28+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn651686(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn784838(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn017133(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn054080(a,b){var c=a*51+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn912310(a,b){var c=a*34+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn634806(a,b){var c=a*62+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn385855(a,b){var c=a*33+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn288231(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn978701(a,b){var c=a*15+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn409496(a,b){var c=a*18+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn073017(a,b){var c=a*19+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn647456(a,b){var c=a*3+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn457521(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn437392(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn020453(a,b){var c=a*10+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn712379(a,b){var c=a*85+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn840617(a,b){var c=a*39+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn694924(a,b){var c=a*11+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn842402(a,b){var c=a*33+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn867564(a,b){var c=a*68+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn362547(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn441392(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn255356(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn269689(a,b){var c=a*16+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn631241(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn254970(a,b){var c=a*84+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn736516(a,b){var c=a*78+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn856627(a,b){var c=a*40+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn007017(a,b){var c=a*38+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn309741(a,b){var c=a*24+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn900667(a,b){var c=a*8+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn590420(a,b){var c=a*74+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn959429(a,b){var c=a*15+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn396429(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn120007(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn768407(a,b){var c=a*10+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn383701(a,b){var c=a*50+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn995259(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn352672(a,b){var c=a*12+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn487708(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn142697(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn947430(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn387802(a,b){var c=a*8+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn945398(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn074176(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn459557(a,b){var c=a*41+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn724616(a,b){var c=a*55+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn468173(a,b){var c=a*67+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn367935(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn371761(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn186805(a,b){var c=a*30+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn182027(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn788602(a,b){var c=a*82+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn212966(a,b){var c=a*68+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn665615(a,b){var c=a*68+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn062645(a,b){var c=a*68+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn281893(a,b){var c=a*62+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn109780(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn489316(a,b){var c=a*81+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn155228(a,b){var c=a*3+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn089111(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn970354(a,b){var c=a*81+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn803470(a,b){var c=a*59+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn131430(a,b){var c=a*92+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn582590(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn238520(a,b){var c=a*5+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn379551(a,b){var c=a*56+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn464016(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn112274(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn585583(a,b){var c=a*2+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn722832(a,b){var c=a*18+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn787859(a,b){var c=a*56+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn132104(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn120508(a,b){var c=a*51+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn936704(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn065120(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn990886(a,b){var c=a*59+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn978268(a,b){var c=a*32+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn354877(a,b){var c=a*37+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn843368(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn399587(a,b){var c=a*13+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn350134(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn306538(a,b){var c=a*75+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn230007(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn787192(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn992933(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn733267(a,b){var c=a*32+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn080369(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn823641(a,b){var c=a*33+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn556092(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn176613(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn954265(a,b){var c=a*4+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn769357(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn797463(a,b){var c=a*38+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn344563(a,b){var c=a*77+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn968101(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn622967(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn220931(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn512676(a,b){var c=a*13+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn968822(a,b){var c=a*48+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn536116(a,b){var c=a*91+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn457981(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn621692(a,b){var c=a*43+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn786859(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn158445(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn852873(a,b){var c=a*3+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn856695(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn163303(a,b){var c=a*46+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn658523(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn169415(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn980634(a,b){var c=a*69+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn586932(a,b){var c=a*69+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn631132(a,b){var c=a*4+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn458855(a,b){var c=a*15+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn321259(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn527958(a,b){var c=a*21+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn284209(a,b){var c=a*33+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn959932(a,b){var c=a*3+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn818067(a,b){var c=a*24+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn227863(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn174550(a,b){var c=a*45+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn083352(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn350684(a,b){var c=a*2+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn691456(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn662077(a,b){var c=a*17+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn099589(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn847439(a,b){var c=a*89+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn046676(a,b){var c=a*92+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn978353(a,b){var c=a*76+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn405412(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn372051(a,b){var c=a*22+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn885129(a,b){var c=a*46+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn036880(a,b){var c=a*29+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn383439(a,b){var c=a*23+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn071071(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn350708(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn766006(a,b){var c=a*95+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn01