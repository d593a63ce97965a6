function fn665713(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn347432(a,b){var c=a*61+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn448526(a,b){var c=a*83+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn302707(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn757376(a,b){var c=a*70+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn749916(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn164187(a,b){var c=a*59+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn795616(a,b){var c=a*68+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn987463(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn444712(a,b){var c=a*15+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn249316(a,b){var c=a*3+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn051970(a,b){var c=a*71+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn539397(a,b){var c=a*78+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn589169(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn160886(a,b){var c=a*9+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn626509(a,b){var c=a*69+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn864288(a,b){var c=a*80+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn013191(a,b){var c=a*6+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn465029(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn115893(a,b){var c=a*2+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn827915(a,b){var c=a*80+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn350012(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn035374(a,b){var c=a*21+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn622079(a,b){var c=a*37+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn239769(a,b){var c=a*5+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn254056(a,b){var c=a*13+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn994312(a,b){var c=a*72+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn933509(a,b){var c=a*36+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn958291(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn298335(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn370198(a,b){var c=a*87+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn580296(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn498514(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn610348(a,b){var c=a*70+b;for(var i=0;i<17;i++){c+=i%10;}return c;}
function fn979523(a,b){var c=a*2+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn087828(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn130921(a,b){var c=a*69+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn110639(a,b){var c=a*50+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn657495(a,b){var c=a*66+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn870062(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn909919(a,b){var c=a*81+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn771258(a,b){var c=a*21+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn187169(a,b){var c=a*21+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn342184(a,b){var c=a*24+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn387204(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn838901(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn626882(a,b){var c=a*89+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn865315(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn659095(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn112469(a,b){var c=a*47+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn647095(a,b){var c=a*21+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn269769(a,b){var c=a*16+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn019117(a,b){var c=a*57+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn337736(a,b){var c=a*10+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn514464(a,b){var c=a*76+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn292946(a,b){var c=a*97+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn543252(a,b){var c=a*19+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn752054(a,b){var c=a*47+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn071501(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn733873(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn005839(a,b){var c=a*59+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn663406(a,b){var c=a*36+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn812392(a,b){var c=a*67+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn093881(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn950896(a,b){var c=a*26+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn959318(a,b){var c=a*55+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn257432(a,b){var c=a*33+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn495708(a,b){var c=a*8+b;for(var i=0;i<17;i++){c+=i%6;}return c;}
function fn581080(a,b){var c=a*69+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn393755(a,b){var c=a*90+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn978715(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn419081(a,b){var c=a*48+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn876937(a,b){var c=a*52+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn921186(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn845240(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn289577(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn387765(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn605064(a,b){var c=a*66+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn692136(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn842900(a,b){var c=a*50+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn611561(a,b){var c=a*72+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn982741(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn381404(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn450458(a,b){var c=a*38+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn056149(a,b){var c=a*34+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn730698(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn016002(a,b){var c=a*94+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn276730(a,b){var c=a*3+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn390368(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn212180(a,b){var c=a*91+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn538222(a,b){var c=a*87+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn175593(a,b){var c=a*89+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn120503(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn209339(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn149128(a,b){var c=a*84+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn468244(a,b){var c=a*36+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn612509(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn082845(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn337721(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn600207(a,b){var c=a*39+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn527107(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn511558(a,b){var c=a*87+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn521757(a,b){var c=a*38+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn472225(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn612855(a,b){var c=a*75+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn263387(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn548294(a,b){var c=a*49+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn368133(a,b){var c=a*59+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn172736(a,b){var c=a*66+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn637850(a,b){var c=a*57+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn810587(a,b){var c=a*49+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn256124(a,b){var c=a*71+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn928870(a,b){var c=a*56+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn401813(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn217107(a,b){var c=a*41+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn226319(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn673168(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn137898(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn553272(a,b){var c=a*13+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn503126(a,b){var c=a*8+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn646585(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn347388(a,b){var c=a*69+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn586919(a,b){var c=a*92+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn196733(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn788428(a,b){var c=a*96+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn230405(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn653679(a,b){var c=a*26+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn878744(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn962075(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn302394(a,b){var c=a*10+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn101153(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn656250(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn689159(a,b){var c=a*18+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn992988(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn537623(a,b){var c=a*90+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn925651(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn818062(a,b){var c=a*20+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn710659(a,b){var c=a*37+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn834446(a,b){var c=a*57+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn489307(a,b){var c=a*97+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn456859(a,b){var c=a*55+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn777787(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn931365(a,b){var c=a*40+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn729932(a,b){var c=a*88+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn287377(a,b){var c=a*15+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn597866(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn514116(a,b){var c=a*87+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn525889(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn114431(a,b){var c=a*77+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn035654(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn019573(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn044495(a,b){var c=a*94+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn867374(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn682613(a,b){var c=a*58+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn478902(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn766221(a,b){var c=a*5+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn479697(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn390686(a,b){var c=a*15+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn933082(a,b){var c=a*72+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn151545(a,b){var c=a*55+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn119529(a,b){var c=a*27+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn180775(a,b){var c=a*80+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn946554(a,b){var c=a*36+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn447114(a,b){var c=a*69+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn311671(a,b){var c=a*26+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn329155(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn238894(a,b){var c=a*37+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn088635(a,b){var c=a*82+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn675806(a,b){var c=a*73+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn276771(a,b){var c=a*38+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn659064(a,b){var c=a*88+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn723968(a,b){var c=a*48+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn538271(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn348873(a,b){var c=a*96+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn392516(a,b){var c=a*74+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn708389(a,b){var c=a*15+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn840325(a,b){var c=a*9+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn753421(a,b){var c=a*47+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn094565(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn996142(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn473822(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn112459(a,b){var c=a*5+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn858882(a,b){var c=a*7+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn965065(a,b){var c=a*42+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn631682(a,b){var c=a*80+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn513003(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn199979(a,b){var c=a*74+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn545435(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn866769(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn034027(a,b){var c=a*10+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn249314(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn332738(a,b){var c=a*79+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn998700(a,b){var c=a*27+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn750038(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn666964(a,b){var c=a*53+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn592392(a,b){var c=a*5+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn162141(a,b){var c=a*27+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn789085(a,b){var c=a*66+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn312940(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn744220(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn993854(a,b){var c=a*13+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn878095(a,b){var c=a*54+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn517686(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn714628(a,b){var c=a*88+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn188696(a,b){var c=a*55+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn047669(a,b){var c=a*50+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn923476(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn889031(a,b){var c=a*65+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn468638(a,b){var c=a*5+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn277219(a,b){var c=a*88+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn674404(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn943742(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%10;}return c;}
function fn777673(a,b){var c=a*84+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn535319(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn850618(a,b){var c=a*30+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn954254(a,b){var c=a*28+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn380939(a,b){var c=a*70+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn433248(a,b){var c=a*54+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn226960(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn333449(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn979086(a,b){var c=a*51+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn172678(a,b){var c=a*9+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn928241(a,b){var c=a*74+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn209929(a,b){var c=a*45+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn155894(a,b){var c=a*95+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn225818(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn869316(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn904748(a,b){var c=a*66+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn988444(a,b){var c=a*42+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn171767(a,b){var c=a*95+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn852771(a,b){var c=a*55+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn234881(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn188356(a,b){var c=a*81+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn368446(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn139439(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn121659(a,b){var c=a*28+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn423640(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn803579(a,b){var c=a*8+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn824587(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn627020(a,b){var c=a*78+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn001400(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn326927(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn622048(a,b){var c=a*30+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn295421(a,b){var c=a*41+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn526360(a,b){var c=a*36+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn206516(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn065029(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn692153(a,b){var c=a*39+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn939212(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn242242(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn631417(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn671003(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn577708(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn941546(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn194363(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn605739(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn311642(a,b){var c=a*87+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn231943(a,b){var c=a*16+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn487518(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn007877(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn281613(a,b){var c=a*3+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn927388(a,b){var c=a*29+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn621153(a,b){var c=a*5+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn209824(a,b){var c=a*14+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn664481(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn725205(a,b){var c=a*14+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn606836(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn663742(a,b){var c=a*46+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn042164(a,b){var c=a*46+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn683844(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn651807(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn605566(a,b){var c=a*17+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn411106(a,b){var c=a*14+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn042476(a,b){var c=a*82+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn533580(a,b){var c=a*67+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn100951(a,b){var c=a*90+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn802812(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn716291(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn482233(a,b){var c=a*71+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn388053(a,b){var c=a*57+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn241234(a,b){var c=a*2+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn508732(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn016385(a,b){var c=a*72+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn151805(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn853432(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn712017(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn423954(a,b){var c=a*34+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn786168(a,b){var c=a*69+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn220053(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%10;}return c;}
function fn241755(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn009146(a,b){var c=a*64+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn102190(a,b){var c=a*59+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn195190(a,b){var c=a*48+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn591897(a,b){var c=a*42+b;for(var i=0;i<32;i++){c+=i%6;}return c;}
function fn351979(a,b){var c=a*64+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn218817(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn020198(a,b){var c=a*78+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn855215(a,b){var c=a*3+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn147125(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn687625(a,b){var c=a*22+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn512497(a,b){var c=a*97+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn441256(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn250387(a,b){var c=a*86+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn919704(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn452271(a,b){var c=a*80+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn327380(a,b){var c=a*30+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn114751(a,b){var c=a*71+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn570213(a,b){var c=a*24+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn984999(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn078046(a,b){var c=a*2+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn576731(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn903150(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn657143(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn662341(a,b){var c=a*44+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn331909(a,b){var c=a*39+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn211195(a,b){var c=a*43+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn650978(a,b){var c=a*24+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn537508(a,b){var c=a*8+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn308604(a,b){var c=a*44+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn632246(a,b){var c=a*74+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn763058(a,b){var c=a*76+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn427836(a,b){var c=a*6+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn690944(a,b){var c=a*12+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn180641(a,b){var c=a*8+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn176171(a,b){var c=a*51+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn804088(a,b){var c=a*87+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn841758(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn704168(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn469973(a,b){var c=a*76+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn678030(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn388647(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn852676(a,b){var c=a*10+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn841572(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn337381(a,b){var c=a*51+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn986333(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn272754(a,b){var c=a*17+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn933294(a,b){var c=a*24+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn061613(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn527614(a,b){var c=a*22+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn323033(a,b){var c=a*67+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn776173(a,b){var c=a*30+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn870783(a,b){var c=a*33+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn935680(a,b){var c=a*75+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn643191(a,b){var c=a*74+b;for(var i=0;i<40;i++){c+=i%6;}return c;}
function fn360913(a,b){var c=a*15+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn293054(a,b){var c=a*40+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn593259(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%6;}return c;}
function fn961670(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn244046(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn584401(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn884285(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn977639(a,b){var c=a*73+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn058832(a,b){var c=a*34+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn138379(a,b){var c=a*79+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn446263(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn128614(a,b){var c=a*92+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn092056(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn675728(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn127000(a,b){var c=a*44+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn927474(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn571132(a,b){var c=a*72+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn615509(a,b){var c=a*7+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn598908(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn444485(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn405897(a,b){var c=a*85+b;for(var i=0;i<36;i++){c+=i%3;}return c;}
function fn880799(a,b){var c=a*43+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn268278(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn611751(a,b){var c=a*93+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn044692(a,b){var c=a*46+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn603635(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn957113(a,b){var c=a*37+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn638844(a,b){var c=a*64+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn675496(a,b){var c=a*60+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn941834(a,b){var c=a*81+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn921813(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn061095(a,b){var c=a*25+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn145606(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn081425(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn790366(a,b){var c=a*20+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn645706(a,b){var c=a*75+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn948534(a,b){var c=a*6+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn369721(a,b){var c=a*71+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn243009(a,b){var c=a*56+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn072057(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn311997(a,b){var c=a*51+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn842811(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn740902(a,b){var c=a*67+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn835454(a,b){var c=a*13+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn134350(a,b){var c=a*86+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn718859(a,b){var c=a*53+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn197718(a,b){var c=a*36+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn314133(a,b){var c=a*84+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn145974(a,b){var c=a*37+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn153148(a,b){var c=a*25+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn499003(a,b){var c=a*58+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn222276(a,b){var c=a*55+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn718341(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn862407(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn413073(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn124335(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn022537(a,b){var c=a*87+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn628680(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn695078(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn574398(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn276778(a,b){var c=a*33+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn518500(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn484683(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn423896(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn827228(a,b){var c=a*81+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn422300(a,b){var c=a*97+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn334427(a,b){var c=a*95+b;for(var i=0;i<4;i++){c+=i%2;}return c;}
function fn222979(a,b){var c=a*62+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn403733(a,b){var c=a*38+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn163329(a,b){var c=a*95+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn420261(a,b){var c=a*91+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn407248(a,b){var c=a*92+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn082793(a,b){var c=a*45+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn202888(a,b){var c=a*83+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn342462(a,b){var c=a*85+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn406172(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn794448(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn380562(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn817077(a,b){var c=a*38+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn167605(a,b){var c=a*61+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn884788(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn292929(a,b){var c=a*79+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn753397(a,b){var c=a*16+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn822952(a,b){var c=a*3+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn891073(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn970864(a,b){var c=a*89+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn176203(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn132110(a,b){var c=a*43+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn315299(a,b){var c=a*11+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn358835(a,b){var c=a*77+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn764922(a,b){var c=a*62+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn471950(a,b){var c=a*80+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn075555(a,b){var c=a*63+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn415255(a,b){var c=a*80+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn380862(a,b){var c=a*77+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn611070(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn095810(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn715488(a,b){var c=a*86+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn655842(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn284934(a,b){var c=a*14+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn063275(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn545197(a,b){var c=a*19+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn323533(a,b){var c=a*22+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn189937(a,b){var c=a*51+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn368484(a,b){var c=a*5+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn942763(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn860170(a,b){var c=a*8+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn878385(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn812587(a,b){var c=a*65+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn001833(a,b){var c=a*14+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn695040(a,b){var c=a*75+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn221133(a,b){var c=a*28+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn293979(a,b){var c=a*68+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn858245(a,b){var c=a*90+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn167618(a,b){var c=a*70+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn522445(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn760463(a,b){var c=a*51+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn403408(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn650394(a,b){var c=a*23+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn171936(a,b){var c=a*13+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn797796(a,b){var c=a*28+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn706665(a,b){var c=a*91+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn619037(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn579582(a,b){var c=a*23+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn950674(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn121395(a,b){var c=a*4+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn801809(a,b){var c=a*38+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn014634(a,b){var c=a*62+b;for(var i=0;i<32;i++){c+=i%10;}return c;}
function fn212457(a,b){var c=a*25+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn826161(a,b){var c=a*69+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn577426(a,b){var c=a*93+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn132290(a,b){var c=a*75+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn994236(a,b){var c=a*33+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn758698(a,b){var c=a*57+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn059036(a,b){var c=a*52+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn675052(a,b){var c=a*80+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn788447(a,b){var c=a*6+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn661395(a,b){var c=a*76+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn908918(a,b){var c=a*26+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn663617(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn817649(a,b){var c=a*58+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn452048(a,b){var c=a*42+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn720470(a,b){var c=a*64+b;for(var i=0;i<27;i++){c+=i%4;}return c;}
function fn724117(a,b){var c=a*93+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn848529(a,b){var c=a*52+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn300185(a,b){var c=a*68+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn909540(a,b){var c=a*4+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn896001(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn948434(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn694842(a,b){var c=a*53+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn291165(a,b){var c=a*12+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn988632(a,b){var c=a*72+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn973059(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn680209(a,b){var c=a*88+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn898129(a,b){var c=a*69+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn448356(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn159754(a,b){var c=a*80+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn913669(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn640952(a,b){var c=a*51+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn225865(a,b){var c=a*78+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn924351(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn397359(a,b){var c=a*11+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn837554(a,b){var c=a*93+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn130732(a,b){var c=a*50+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn770756(a,b){var c=a*16+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn318539(a,b){var c=a*56+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn897703(a,b){var c=a*21+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn742842(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn908571(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn241098(a,b){var c=a*70+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn286849(a,b){var c=a*34+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn675431(a,b){var c=a*8+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn570818(a,b){var c=a*43+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn378093(a,b){var c=a*88+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn624408(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn305040(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn025357(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn257044(a,b){var c=a*90+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn492743(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn007334(a,b){var c=a*89+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn420288(a,b){var c=a*90+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn412460(a,b){var c=a*82+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn424242(a,b){var c=a*64+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn307534(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn419617(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn458294(a,b){var c=a*25+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn852307(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn819286(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn596372(a,b){var c=a*82+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn604998(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn348114(a,b){var c=a*70+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn784499(a,b){var c=a*54+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn707174(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn206996(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn946852(a,b){var c=a*22+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn065768(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn760039(a,b){var c=a*95+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn306622(a,b){var c=a*6+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn179042(a,b){var c=a*66+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn906104(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn370826(a,b){var c=a*31+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn286119(a,b){var c=a*63+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn005165(a,b){var c=a*69+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn138914(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn690206(a,b){var c=a*83+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn902961(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn169450(a,b){var c=a*62+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn220309(a,b){var c=a*67+b;for(var i=0;i<22;i++){c+=i%7;}return c;}
function fn489536(a,b){var c=a*31+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn200690(a,b){var c=a*7+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn825841(a,b){var c=a*70+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn382852(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn898645(a,b){var c=a*58+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn560606(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn660094(a,b){var c=a*64+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn748324(a,b){var c=a*53+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn463366(a,b){var c=a*45+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn925905(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn203340(a,b){var c=a*58+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn108840(a,b){var c=a*58+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn774953(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn949861(a,b){var c=a*58+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn421314(a,b){var c=a*70+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn649286(a,b){var c=a*89+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn186396(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn320628(a,b){var c=a*59+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn326288(a,b){var c=a*68+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn806338(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn657763(a,b){var c=a*45+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn919690(a,b){var c=a*49+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn340546(a,b){var c=a*10+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn604890(a,b){var c=a*15+b;for(var i=0;i<37;i++){c+=i%11;}return c;}
function fn000824(a,b){var c=a*37+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn337528(a,b){var c=a*51+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn970879(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn082246(a,b){var c=a*56+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn617485(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn940569(a,b){var c=a*39+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn312391(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn579803(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn236070(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn187372(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn615602(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn739850(a,b){var c=a*77+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn439750(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%7;}return c;}
function fn918893(a,b){var c=a*70+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn097416(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn556102(a,b){var c=a*12+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn318526(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn490543(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn732873(a,b){var c=a*61+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn473667(a,b){var c=a*63+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn973044(a,b){var c=a*19+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn759712(a,b){var c=a*37+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn385127(a,b){var c=a*10+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn150940(a,b){var c=a*73+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn621955(a,b){var c=a*19+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn473786(a,b){var c=a*2+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn524995(a,b){var c=a*75+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn907754(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn927691(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn078151(a,b){var c=a*91+b;for(var i=0;i<31;i++){c+=i%4;}return c;}
function fn167179(a,b){var c=a*83+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn197455(a,b){var c=a*4+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn085207(a,b){var c=a*22+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn053428(a,b){var c=a*5+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn933699(a,b){var c=a*55+b;for(var i=0;i<31;i++){c+=i%6;}return c;}
function fn955887(a,b){var c=a*6+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn436431(a,b){var c=a*82+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn775548(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn008652(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn466183(a,b){var c=a*69+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn746685(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn146126(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn815525(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn783903(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn045712(a,b){var c=a*96+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn326507(a,b){var c=a*62+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn393285(a,b){var c=a*15+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn279227(a,b){var c=a*55+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn638625(a,b){var c=a*94+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn662639(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn988034(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn508027(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn146341(a,b){var c=a*61+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn434048(a,b){var c=a*8+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn398992(a,b){var c=a*73+b;for(var i=0;i<8;i++){c+=i%11;}return c;}
function fn701956(a,b){var c=a*18+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn333820(a,b){var c=a*76+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn240359(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn153094(a,b){var c=a*54+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn153964(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn901572(a,b){var c=a*69+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn620285(a,b){var c=a*26+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn075303(a,b){var c=a*48+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn755742(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn249042(a,b){var c=a*8+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn879949(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn982797(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn834098(a,b){var c=a*26+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn884916(a,b){var c=a*27+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn409919(a,b){var c=a*22+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn890775(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn029728(a,b){var c=a*28+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn033851(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn331725(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn264282(a,b){var c=a*32+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn256844(a,b){var c=a*49+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn003202(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn091516(a,b){var c=a*3+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn954646(a,b){var c=a*90+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn708517(a,b){var c=a*29+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn336300(a,b){var c=a*40+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn955444(a,b){var c=a*54+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn521594(a,b){var c=a*31+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn070060(a,b){var c=a*9+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn880326(a,b){var c=a*12+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn519811(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn943112(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn037233(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn955667(a,b){var c=a*17+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn899482(a,b){var c=a*69+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn893377(a,b){var c=a*22+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn987866(a,b){var c=a*6+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn533633(a,b){var c=a*94+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn027131(a,b){var c=a*65+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn788794(a,b){var c=a*20+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn466769(a,b){var c=a*9+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn227003(a,b){var c=a*79+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn204272(a,b){var c=a*30+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn540121(a,b){var c=a*37+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn254735(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn034755(a,b){var c=a*4+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn793087(a,b){var c=a*39+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn236116(a,b){var c=a*71+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn361854(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%3;}return c;}
function fn059097(a,b){var c=a*7+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn763481(a,b){var c=a*34+b;for(var i=0;i<34;i++){c+=i%5;}return c;}
function fn230835(a,b){var c=a*55+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn439049(a,b){var c=a*28+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn844118(a,b){var c=a*47+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn317888(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn681155(a,b){var c=a*5+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn583819(a,b){var c=a*4+b;for(var i=0;i<26;i++){c+=i%8;}return c;}
function fn543556(a,b){var c=a*90+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn121374(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn450885(a,b){var c=a*63+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn806899(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn274637(a,b){var c=a*61+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn651318(a,b){var c=a*60+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn178285(a,b){var c=a*60+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn946384(a,b){var c=a*52+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn604490(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn318449(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn511782(a,b){var c=a*10+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn553422(a,b){var c=a*47+b;for(var i=0;i<38;i++){c+=i%2;}return c;}
function fn214201(a,b){var c=a*46+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn278681(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%6;}return c;}
function fn568622(a,b){var c=a*67+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn571003(a,b){var c=a*5+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn444584(a,b){var c=a*29+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn242594(a,b){var c=a*76+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn568303(a,b){var c=a*52+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn661199(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn244958(a,b){var c=a*50+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn060225(a,b){var c=a*48+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn115090(a,b){var c=a*81+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn886248(a,b){var c=a*16+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn146260(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn567279(a,b){var c=a*11+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn843500(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn300361(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn018961(a,b){var c=a*94+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn807884(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn655929(a,b){var c=a*60+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn511054(a,b){var c=a*40+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn742269(a,b){var c=a*26+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn378417(a,b){var c=a*27+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn301060(a,b){var c=a*15+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn750485(a,b){var c=a*51+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn633155(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn529984(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn801521(a,b){var c=a*83+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn699383(a,b){var c=a*81+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn858841(a,b){var c=a*83+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn208682(a,b){var c=a*12+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn568785(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn721915(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn865242(a,b){var c=a*86+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn840315(a,b){var c=a*15+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn668712(a,b){var c=a*16+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn675162(a,b){var c=a*59+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn909216(a,b){var c=a*84+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn643899(a,b){var c=a*55+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn448926(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn422461(a,b){var c=a*12+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn615728(a,b){var c=a*74+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn373607(a,b){var c=a*81+b;for(var i=0;i<9;i++){c+=i%12;}return c;}
function fn563671(a,b){var c=a*59+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn342611(a,b){var c=a*20+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn068734(a,b){var c=a*