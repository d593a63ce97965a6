function fn478199(a,b){var c=a*54+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn418057(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn421695(a,b){var c=a*37+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn640564(a,b){var c=a*53+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn491158(a,b){var c=a*23+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn636432(a,b){var c=a*56+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn050070(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn181740(a,b){var c=a*46+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn388199(a,b){var c=a*30+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn218805(a,b){var c=a*16+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn738321(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn025634(a,b){var c=a*68+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn545676(a,b){var c=a*61+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn341514(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn065526(a,b){var c=a*35+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn586278(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn379401(a,b){var c=a*50+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn655262(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn276106(a,b){var c=a*39+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn468333(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn194346(a,b){var c=a*92+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn000562(a,b){var c=a*63+b;for(var i=0;i<5;i++){c+=i%5;}return c;}
function fn199188(a,b){var c=a*76+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn935514(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn730572(a,b){var c=a*2+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn203700(a,b){var c=a*53+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn606696(a,b){var c=a*52+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn378327(a,b){var c=a*85+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn515552(a,b){var c=a*19+b;for(var i=0;i<15;i++){c+=i%9;}return c;}
function fn108236(a,b){var c=a*19+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn810889(a,b){var c=a*9+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn493967(a,b){var c=a*80+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn812327(a,b){var c=a*16+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn929225(a,b){var c=a*64+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn427198(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn362564(a,b){var c=a*54+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn935892(a,b){var c=a*59+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn446972(a,b){var c=a*75+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn032457(a,b){var c=a*23+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn831743(a,b){var c=a*53+b;for(var i=0;i<20;i++){c+=i%13;}return c;}
function fn634469(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn552428(a,b){var c=a*44+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn805537(a,b){var c=a*57+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn868241(a,b){var c=a*37+b;for(var i=0;i<20;i++){c+=i%11;}return c;}
function fn286671(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn427433(a,b){var c=a*87+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn224947(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn874667(a,b){var c=a*54+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn135934(a,b){var c=a*43+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn618344(a,b){var c=a*82+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn273559(a,b){var c=a*97+b;for(var i=0;i<34;i++){c+=i%10;}return c;}
function fn560962(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn461755(a,b){var c=a*9+b;for(var i=0;i<8;i++){c+=i%9;}return c;}
function fn535957(a,b){var c=a*14+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn645788(a,b){var c=a*40+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn275759(a,b){var c=a*27+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn736288(a,b){var c=a*14+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn731818(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn324414(a,b){var c=a*41+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn568425(a,b){var c=a*36+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn726586(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn068453(a,b){var c=a*36+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn486548(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn362319(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn668936(a,b){var c=a*35+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn457387(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn539554(a,b){var c=a*7+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn644578(a,b){var c=a*73+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn593989(a,b){var c=a*62+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn842266(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn473186(a,b){var c=a*12+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn519675(a,b){var c=a*32+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn308035(a,b){var c=a*6+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn496650(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn492437(a,b){var c=a*2+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn790799(a,b){var c=a*85+b;for(var i=0;i<15;i++){c+=i%6;}return c;}
function fn050088(a,b){var c=a*89+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn222127(a,b){var c=a*66+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn867659(a,b){var c=a*79+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn491749(a,b){var c=a*97+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn572319(a,b){var c=a*62+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn661307(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn627168(a,b){var c=a*96+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn177809(a,b){var c=a*25+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn868379(a,b){var c=a*59+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn059677(a,b){var c=a*48+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn334924(a,b){var c=a*5+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn824402(a,b){var c=a*91+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn907243(a,b){var c=a*39+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn958781(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn271043(a,b){var c=a*41+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn349537(a,b){var c=a*5+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn320542(a,b){var c=a*83+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn147684(a,b){var c=a*43+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn421881(a,b){var c=a*90+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn647104(a,b){var c=a*58+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn101419(a,b){var c=a*79+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn794609(a,b){var c=a*32+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn120678(a,b){var c=a*59+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn591067(a,b){var c=a*91+b;for(var i=0;i<12;i++){c+=i%9;}return c;}
function fn475311(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn398690(a,b){var c=a*50+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn521396(a,b){var c=a*75+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn991562(a,b){var c=a*34+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn736093(a,b){var c=a*7+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn452788(a,b){var c=a*88+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn295865(a,b){var c=a*89+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn454921(a,b){var c=a*71+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn198534(a,b){var c=a*20+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn775204(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn038445(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn808192(a,b){var c=a*71+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn248240(a,b){var c=a*52+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn119470(a,b){var c=a*83+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn920230(a,b){var c=a*39+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn257846(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn005049(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn836547(a,b){var c=a*23+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn130486(a,b){var c=a*49+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn169723(a,b){var c=a*93+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn033839(a,b){var c=a*72+b;for(var i=0;i<27;i++){c+=i%8;}return c;}
function fn472242(a,b){var c=a*11+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn475795(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn009280(a,b){var c=a*30+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn886534(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%13;}return c;}
function fn070803(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn619301(a,b){var c=a*95+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn806718(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn501064(a,b){var c=a*53+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn136814(a,b){var c=a*36+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn149448(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn528515(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn931607(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn469114(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn538514(a,b){var c=a*5+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn140595(a,b){var c=a*25+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn263681(a,b){var c=a*39+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn088122(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn513377(a,b){var c=a*84+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn532714(a,b){var c=a*5+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn435960(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn157296(a,b){var c=a*91+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn172719(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn560522(a,b){var c=a*19+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn346740(a,b){var c=a*48+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn614176(a,b){var c=a*11+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn927582(a,b){var c=a*49+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn598017(a,b){var c=a*30+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn556156(a,b){var c=a*72+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn257596(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn096058(a,b){var c=a*56+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn837272(a,b){var c=a*7+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn875398(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn125567(a,b){var c=a*17+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn257703(a,b){var c=a*64+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn393932(a,b){var c=a*64+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn640294(a,b){var c=a*17+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn771463(a,b){var c=a*22+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn509682(a,b){var c=a*37+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn110803(a,b){var c=a*19+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn578047(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn799824(a,b){var c=a*91+b;for(var i=0;i<19;i++){c+=i%13;}return c;}
function fn813455(a,b){var c=a*25+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn376842(a,b){var c=a*64+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn445466(a,b){var c=a*20+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn749614(a,b){var c=a*32+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn741809(a,b){var c=a*3+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn815999(a,b){var c=a*27+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn267871(a,b){var c=a*44+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn519989(a,b){var c=a*46+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn705912(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn024432(a,b){var c=a*84+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn054023(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn329506(a,b){var c=a*20+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn415587(a,b){var c=a*82+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn323005(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%3;}return c;}
function fn094576(a,b){var c=a*6+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn200267(a,b){var c=a*41+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn558458(a,b){var c=a*20+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn199909(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%2;}return c;}
function fn537297(a,b){var c=a*49+b;for(var i=0;i<29;i++){c+=i%11;}return c;}
function fn010961(a,b){var c=a*18+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn349026(a,b){var c=a*77+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn578576(a,b){var c=a*25+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn434323(a,b){var c=a*95+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn255257(a,b){var c=a*63+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn235685(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn381227(a,b){var c=a*91+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn986149(a,b){var c=a*96+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn233515(a,b){var c=a*19+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn624781(a,b){var c=a*84+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn702119(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn731210(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn098590(a,b){var c=a*28+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn005123(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%8;}return c;}
function fn020275(a,b){var c=a*50+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn988946(a,b){var c=a*82+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn922351(a,b){var c=a*35+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn330268(a,b){var c=a*34+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn126450(a,b){var c=a*3+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn456105(a,b){var c=a*55+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn666673(a,b){var c=a*58+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn718456(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn392397(a,b){var c=a*75+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn584393(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn759404(a,b){var c=a*54+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn597080(a,b){var c=a*68+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn390005(a,b){var c=a*81+b;for(var i=0;i<31;i++){c+=i%10;}return c;}
function fn917882(a,b){var c=a*44+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn860844(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn975621(a,b){var c=a*85+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn286459(a,b){var c=a*85+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn601387(a,b){var c=a*81+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn472129(a,b){var c=a*15+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn660684(a,b){var c=a*97+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn126739(a,b){var c=a*94+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn800737(a,b){var c=a*75+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn658374(a,b){var c=a*54+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn670180(a,b){var c=a*66+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn896076(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn850887(a,b){var c=a*80+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn782743(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn742765(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn970723(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn148276(a,b){var c=a*46+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn388792(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn268168(a,b){var c=a*24+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn309226(a,b){var c=a*62+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn260394(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn869968(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn188292(a,b){var c=a*32+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn726325(a,b){var c=a*34+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn626957(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn696864(a,b){var c=a*87+b;for(var i=0;i<4;i++){c+=i%5;}return c;}
function fn270267(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn232483(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn868680(a,b){var c=a*15+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn119254(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn256229(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn942408(a,b){var c=a*86+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn334474(a,b){var c=a*23+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn142252(a,b){var c=a*19+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn844934(a,b){var c=a*92+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn620814(a,b){var c=a*89+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn884147(a,b){var c=a*84+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn818566(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn125667(a,b){var c=a*65+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn456823(a,b){var c=a*73+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn988918(a,b){var c=a*23+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn918573(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn709426(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn039507(a,b){var c=a*43+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn422459(a,b){var c=a*82+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn144241(a,b){var c=a*32+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn528179(a,b){var c=a*27+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn481446(a,b){var c=a*49+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn656425(a,b){var c=a*16+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn299916(a,b){var c=a*56+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn832792(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn170068(a,b){var c=a*11+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn967527(a,b){var c=a*72+b;for(var i=0;i<13;i++){c+=i%6;}return c;}
function fn119171(a,b){var c=a*20+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn042323(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn990502(a,b){var c=a*29+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn594824(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn006827(a,b){var c=a*84+b;for(var i