function fn408515(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn968682(a,b){var c=a*16+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn755767(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn415015(a,b){var c=a*53+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn746982(a,b){var c=a*86+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn578286(a,b){var c=a*95+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn489403(a,b){var c=a*33+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn632207(a,b){var c=a*54+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn612755(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn485826(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn125531(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn813156(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn451309(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn663109(a,b){var c=a*64+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn536842(a,b){var c=a*57+b;for(var i=0;i<7;i++){c+=i%3;}return c;}
function fn456927(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn713643(a,b){var c=a*17+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn472630(a,b){var c=a*65+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn566856(a,b){var c=a*80+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn328743(a,b){var c=a*97+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn575619(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn280304(a,b){var c=a*11+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn317808(a,b){var c=a*40+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn495963(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn200777(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn889066(a,b){var c=a*90+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn296961(a,b){var c=a*20+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn938183(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn378505(a,b){var c=a*63+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn059665(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn891038(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn794399(a,b){var c=a*66+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn172048(a,b){var c=a*21+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn129718(a,b){var c=a*64+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn638317(a,b){var c=a*80+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn136213(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn144609(a,b){var c=a*52+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn874645(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn495462(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn995640(a,b){var c=a*80+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn948456(a,b){var c=a*76+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn901003(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn676444(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn958773(a,b){var c=a*77+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn875074(a,b){var c=a*15+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn057289(a,b){var c=a*12+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn061951(a,b){var c=a*5+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn910022(a,b){var c=a*78+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn858153(a,b){var c=a*21+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn487491(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn625965(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn058772(a,b){var c=a*83+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn844594(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn057477(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn215153(a,b){var c=a*55+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn146082(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn124492(a,b){var c=a*35+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn485847(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn585599(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn584403(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn121864(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn528945(a,b){var c=a*7+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn758691(a,b){var c=a*49+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn585522(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn822189(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn030509(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn598537(a,b){var c=a*65+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn718807(a,b){var c=a*6+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn141658(a,b){var c=a*4+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn787508(a,b){var c=a*56+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn569858(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn570873(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn117400(a,b){var c=a*32+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn556787(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn364831(a,b){var c=a*12+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn760055(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn490449(a,b){var c=a*25+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn868811(a,b){var c=a*28+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn752605(a,b){var c=a*69+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn869983(a,b){var c=a*49+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn984492(a,b){var c=a*15+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn774524(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn151062(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn144648(a,b){var c=a*92+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn402629(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn799640(a,b){var c=a*75+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn403947(a,b){var c=a*29+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn754951(a,b){var c=a*23+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn183706(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn458282(a,b){var c=a*24+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn986318(a,b){var c=a*32+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn122931(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn367685(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn328848(a,b){var c=a*82+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn681662(a,b){var c=a*9+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn175668(a,b){var c=a*82+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn064984(a,b){var c=a*69+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn453731(a,b){var c=a*52+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn771270(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn315891(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn091511(a,b){var c=a*44+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn517344(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn824418(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn900735(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn110431(a,b){var c=a*56+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn318096(a,b){var c=a*61+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn518486(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn626550(a,b){var c=a*96+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn153688(a,b){var c=a*40+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn359800(a,b){var c=a*59+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn369332(a,b){var c=a*66+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn248399(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn360729(a,b){var c=a*32+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn337386(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn291459(a,b){var c=a*27+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn538308(a,b){var c=a*68+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn012085(a,b){var c=a*77+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn158018(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn859587(a,b){var c=a*27+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn923366(a,b){var c=a*25+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn039253(a,b){var c=a*42+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn081258(a,b){var c=a*51+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn854808(a,b){var c=a*9+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn998930(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn960046(a,b){var c=a*44+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn070096(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn767630(a,b){var c=a*16+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn689317(a,b){var c=a*69+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn582172(a,b){var c=a*78+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn265029(a,b){var c=a*12+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn556812(a,b){var c=a*49+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn115572(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn500130(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn020353(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn166308(a,b){var c=a*39+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn100978(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn103675(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn822917(a,b){var c=a*90+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn213310(a,b){var c=a*10+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn429006(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn995561(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn450621(a,b){var c=a*92+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn931307(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn319678(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn742888(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn012966(a,b){var c=a*61+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn299325(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn611538(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn909072(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn992083(a,b){var c=a*89+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn049928(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn730144(a,b){var c=a*70+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn092460(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn507113(a,b){var c=a*51+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn102823(a,b){var c=a*2+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn468539(a,b){var c=a*67+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn603499(a,b){var c=a*30+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn299283(a,b){var c=a*65+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn777711(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn260160(a,b){var c=a*65+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn209018(a,b){var c=a*94+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn268629(a,b){var c=a*90+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn531936(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn524853(a,b){var c=a*57+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn038460(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn309385(a,b){var c=a*74+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn005721(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn329946(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn675803(a,b){var c=a*57+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn902265(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn104957(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn775219(a,b){var c=a*49+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn175185(a,b){var c=a*70+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn635772(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn944100(a,b){var c=a*73+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn389294(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn729224(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn268891(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn412698(a,b){var c=a*13+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn663851(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn198531(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn767968(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn380923(a,b){var c=a*62+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn137756(a,b){var c=a*41+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn390764(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn244420(a,b){var c=a*52+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn841885(a,b){var c=a*18+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn424993(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn192188(a,b){var c=a*36+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn365444(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn191814(a,b){var c=a*13+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn821929(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn022163(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn254098(a,b){var c=a*67+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn978199(a,b){var c=a*81+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn403288(a,b){var c=a*9+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn630739(a,b){var c=a*7+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn036676(a,b){var c=a*45+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn359112(a,b){var c=a*10+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn770415(a,b){var c=a*34+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn930809(a,b){var c=a*21+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn065767(a,b){var c=a*7+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn661492(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn840170(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn767767(a,b){var c=a*16+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn150160(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn863273(a,b){var c=a*36+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn489580(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn062019(a,b){var c=a*64+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn186914(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn461400(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn962593(a,b){var c=a*79+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn401476(a,b){var c=a*43+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn491400(a,b){var c=a*31+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn762560(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn627443(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn018924(a,b){var c=a*86+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn035763(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn362259(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn222597(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn046205(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn005417(a,b){var c=a*17+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn266279(a,b){var c=a*74+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn362627(a,b){var c=a*38+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn501653(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn276889(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn319057(a,b){var c=a*43+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn061872(a,b){var c=a*60+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn093924(a,b){var c=a*49+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn795913(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn981920(a,b){var c=a*97+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn106381(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn275972(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn262910(a,b){var c=a*20+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn810826(a,b){var c=a*76+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn941858(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn019215(a,b){var c=a*56+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn447079(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn742724(a,b){var c=a*10+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn40