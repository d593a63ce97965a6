function fn494964(a,b){var c=a*6+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn146114(a,b){var c=a*83+b;for(var i=0;i<17;i++){c+=i%12;}return c;}
function fn555448(a,b){var c=a*46+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn663899(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn284246(a,b){var c=a*19+b;for(var i=0;i<11;i++){c+=i%4;}return c;}
function fn219902(a,b){var c=a*62+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn821979(a,b){var c=a*50+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn377863(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn399029(a,b){var c=a*15+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn667072(a,b){var c=a*45+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn363657(a,b){var c=a*4+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn087658(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn998677(a,b){var c=a*53+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn358887(a,b){var c=a*73+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn013916(a,b){var c=a*51+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn283214(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn356316(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn856102(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn257848(a,b){var c=a*61+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn828960(a,b){var c=a*47+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn055946(a,b){var c=a*16+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn757064(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn384140(a,b){var c=a*7+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn422491(a,b){var c=a*12+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn741204(a,b){var c=a*2+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn234517(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn433321(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn225875(a,b){var c=a*41+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn885763(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn977797(a,b){var c=a*10+b;for(var i=0;i<32;i++){c+=i%2;}return c;}
function fn587613(a,b){var c=a*21+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn842545(a,b){var c=a*95+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn491503(a,b){var c=a*62+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn085713(a,b){var c=a*74+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn725948(a,b){var c=a*63+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn064591(a,b){var c=a*21+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn301821(a,b){var c=a*63+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn818179(a,b){var c=a*78+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn300808(a,b){var c=a*15+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn441437(a,b){var c=a*24+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn749224(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn473959(a,b){var c=a*32+b;for(var i=0;i<9;i++){c+=i%3;}return c;}
function fn868670(a,b){var c=a*27+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn019958(a,b){var c=a*52+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn337202(a,b){var c=a*89+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn890565(a,b){var c=a*67+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn352581(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn661885(a,b){var c=a*52+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn985800(a,b){var c=a*94+b;for(var i=0;i<39;i++){c+=i%13;}return c;}
function fn744710(a,b){var c=a*3+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn621470(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn331623(a,b){var c=a*17+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn023467(a,b){var c=a*72+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn066864(a,b){var c=a*70+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn418380(a,b){var c=a*9+b;for(var i=0;i<18;i++){c+=i%10;}return c;}
function fn229933(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn051775(a,b){var c=a*25+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn108287(a,b){var c=a*80+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn678535(a,b){var c=a*21+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn986625(a,b){var c=a*82+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn312253(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn746954(a,b){var c=a*2+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn213662(a,b){var c=a*76+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn834752(a,b){var c=a*38+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn299818(a,b){var c=a*27+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn581759(a,b){var c=a*52+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn395651(a,b){var c=a*84+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn874242(a,b){var c=a*65+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn937286(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn060928(a,b){var c=a*29+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn070477(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn420645(a,b){var c=a*17+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn942044(a,b){var c=a*23+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn251651(a,b){var c=a*45+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn242601(a,b){var c=a*69+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn797362(a,b){var c=a*49+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn929797(a,b){var c=a*71+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn123587(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn864584(a,b){var c=a*83+b;for(var i=0;i<4;i++){c+=i%4;}return c;}
function fn518859(a,b){var c=a*11+b;for(var i=0;i<36;i++){c+=i%5;}return c;}
function fn297681(a,b){var c=a*24+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn320410(a,b){var c=a*29+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn257259(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn848636(a,b){var c=a*96+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn675238(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn367881(a,b){var c=a*36+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn875314(a,b){var c=a*20+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn668688(a,b){var c=a*47+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn794005(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn933669(a,b){var c=a*61+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn127858(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%3;}return c;}
function fn945588(a,b){var c=a*14+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn894332(a,b){var c=a*2+b;for(var i=0;i<16;i++){c+=i%5;}return c;}
function fn181682(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn778444(a,b){var c=a*74+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn962846(a,b){var c=a*26+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn522787(a,b){var c=a*40+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn021345(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn836718(a,b){var c=a*91+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn170809(a,b){var c=a*34+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn074738(a,b){var c=a*81+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn757850(a,b){var c=a*45+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn429443(a,b){var c=a*47+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn661474(a,b){var c=a*52+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn508490(a,b){var c=a*10+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn813033(a,b){var c=a*45+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn224356(a,b){var c=a*47+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn622944(a,b){var c=a*50+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn861253(a,b){var c=a*32+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn351659(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%11;}return c;}
function fn493600(a,b){var c=a*11+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn620383(a,b){var c=a*31+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn860118(a,b){var c=a*40+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn883660(a,b){var c=a*23+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn648070(a,b){var c=a*8+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn856585(a,b){var c=a*86+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn554198(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn952091(a,b){var c=a*77+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn698279(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn751106(a,b){var c=a*46+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn283663(a,b){var c=a*13+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn912142(a,b){var c=a*86+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn029094(a,b){var c=a*25+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn179355(a,b){var c=a*43+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn593683(a,b){var c=a*13+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn289417(a,b){var c=a*44+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn640643(a,b){var c=a*66+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn116608(a,b){var c=a*4+b;for(var i=0;i<36;i++){c+=i%8;}return c;}
function fn442520(a,b){var c=a*31+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn668798(a,b){var c=a*93+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn070131(a,b){var c=a*84+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn904011(a,b){var c=a*72+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn495122(a,b){var c=a*45+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn873049(a,b){var c=a*8+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn968081(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn697871(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%13;}return c;}
function fn734984(a,b){var c=a*18+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn765444(a,b){var c=a*39+b;for(var i=0;i<19;i++){c+=i%4;}return c;}
function fn781113(a,b){var c=a*77+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn932378(a,b){var c=a*59+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn466744(a,b){var c=a*14+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn225818(a,b){var c=a*44+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn493258(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn868489(a,b){var c=a*80+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn165111(a,b){var c=a*3+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn622218(a,b){var c=a*26+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn750811(a,b){var c=a*9+b;for(var i=0;i<38;i++){c+=i%7;}return c;}
function fn582185(a,b){var c=a*13+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn984545(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn771511(a,b){var c=a*26+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn397675(a,b){var c=a*74+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn835926(a,b){var c=a*30+b;for(var i=0;i<39;i++){c+=i%12;}return c;}
function fn443731(a,b){var c=a*18+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn173583(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn101056(a,b){var c=a*54+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn523895(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%2;}return c;}
function fn736004(a,b){var c=a*9+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn457086(a,b){var c=a*92+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn095555(a,b){var c=a*18+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn170848(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%2;}return c;}
function fn594328(a,b){var c=a*32+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn410689(a,b){var c=a*78+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn099276(a,b){var c=a*92+b;for(var i=0;i<13;i++){c+=i%12;}return c;}
function fn827323(a,b){var c=a*26+b;for(var i=0;i<26;i++){c+=i%5;}return c;}
function fn318258(a,b){var c=a*80+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn735893(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn968580(a,b){var c=a*61+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn106458(a,b){var c=a*16+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn767748(a,b){var c=a*91+b;for(var i=0;i<35;i++){c+=i%12;}return c;}
function fn728009(a,b){var c=a*81+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn535922(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn738548(a,b){var c=a*59+b;for(var i=0;i<6;i++){c+=i%10;}return c;}
function fn615990(a,b){var c=a*52+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn578922(a,b){var c=a*41+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn520880(a,b){var c=a*51+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn032904(a,b){var c=a*27+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn073675(a,b){var c=a*95+b;for(var i=0;i<8;i++){c+=i%8;}return c;}
function fn755824(a,b){var c=a*63+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn941394(a,b){var c=a*74+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn085137(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn353913(a,b){var c=a*27+b;for(var i=0;i<33;i++){c+=i%4;}return c;}
function fn002830(a,b){var c=a*95+b;for(var i=0;i<37;i++){c+=i%12;}return c;}
function fn444773(a,b){var c=a*27+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn020247(a,b){var c=a*94+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn235477(a,b){var c=a*48+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn720882(a,b){var c=a*51+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn801106(a,b){var c=a*19+b;for(var i=0;i<7;i++){c+=i%7;}return c;}
function fn636163(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn084716(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn256319(a,b){var c=a*4+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn454001(a,b){var c=a*73+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn712900(a,b){var c=a*30+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn975927(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn248402(a,b){var c=a*44+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn490021(a,b){var c=a*88+b;for(var i=0;i<4;i++){c+=i%8;}return c;}
function fn543107(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn902711(a,b){var c=a*69+b;for(var i=0;i<24;i++){c+=i%12;}return c;}
function fn109789(a,b){var c=a*10+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn937471(a,b){var c=a*87+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn697514(a,b){var c=a*57+b;for(var i=0;i<36;i++){c+=i%12;}return c;}
function fn640535(a,b){var c=a*9+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn876399(a,b){var c=a*41+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn881697(a,b){var c=a*75+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn947551(a,b){var c=a*33+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn747247(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn100583(a,b){var c=a*31+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn919814(a,b){var c=a*64+b;for(var i=0;i<5;i++){c+=i%2;}return c;}
function fn059142(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%12;}return c;}
function fn161276(a,b){var c=a*22+b;for(var i=0;i<21;i++){c+=i%5;}return c;}
function fn805342(a,b){var c=a*27+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn008640(a,b){var c=a*60+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn028272(a,b){var c=a*57+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn744193(a,b){var c=a*91+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn431613(a,b){var c=a*11+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn841600(a,b){var c=a*94+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn789279(a,b){var c=a*91+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn385423(a,b){var c=a*16+b;for(var i=0;i<18;i++){c+=i%7;}return c;}
function fn382692(a,b){var c=a*24+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn415874(a,b){var c=a*45+b;for(var i=0;i<8;i++){c+=i%5;}return c;}
function fn175475(a,b){var c=a*51+b;for(var i=0;i<35;i++){c+=i%4;}return c;}
function fn161647(a,b){var c=a*59+b;for(var i=0;i<11;i++){c+=i%11;}return c;}
function fn970516(a,b){var c=a*2+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn695524(a,b){var c=a*89+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn563204(a,b){var c=a*27+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn768231(a,b){var c=a*43+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn444936(a,b){var c=a*38+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn550515(a,b){var c=a*5+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn194608(a,b){var c=a*75+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn279980(a,b){var c=a*87+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn998625(a,b){var c=a*92+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn713995(a,b){var c=a*16+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn455257(a,b){var c=a*31+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn104820(a,b){var c=a*8+b;for(var i=0;i<28;i++){c+=i%9;}return c;}
function fn730837(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn891770(a,b){var c=a*35+b;for(var i=0;i<19;i++){c+=i%6;}return c;}
function fn635981(a,b){var c=a*37+b;for(var i=0;i<22;i++){c+=i%6;}return c;}
function fn464102(a,b){var c=a*39+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn484038(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn516439(a,b){var c=a*60+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn846021(a,b){var c=a*55+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn324184(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn461940(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn433636(a,b){var c=a*22+b;for(var i=0;i<25;i++){c+=i%9;}return c;}
function fn287276(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn215966(a,b){var c=a*36+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn874503(a,b){var c=a*48+b;for(var i=0;i<10;i++){c+=i%12;}return c;}
function fn271906(a,b){var c=a*88+b;for(var i=0;i<39;i++){c+=i%11;}return c;}
function fn423874(a,b){var c=a*70+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn331402(a,b){var c=a*84+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn617907(a,b){var c=a*36+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn087803(a,b){var c=a*95+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn281452(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn565130(a,b){var c=a*75+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn477594(a,b){var c=a*64+b;for(var i=0;i<23;i++){c+=i%2;}return c;}
function fn315295(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn110528(a,b){var c=a*44+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn839303(a,b){var c=a*45+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn377257(a,b){var c=a*29+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn237853(a,b){var c=a*75+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn823841(a,b){var c=a*35+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn180070(a,b){var c=a*64+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn942246(a,b){var c=a*60+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn365181(a,b){var c=a*97+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn660216(a,b){var c=a*60+b;for(var i=0;i<38;i++){c+=i%5;}return c;}
function fn196715(a,b){var c=a*72+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn461589(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%4;}return c;}
function fn853803(a,b){var c=a*83+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn926730(a,b){var c=a*6+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn000435(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn314483(a,b){var c=a*13+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn224197(a,b){var c=a*7+b;for(var i=0;i<8;i++){c+=i%3;}return c;}
function fn971195(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn906535(a,b){var c=a*77+b;for(var i=0;i<14;i++){c+=i%2;}return c;}
function fn952131(a,b){var c=a*15+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn497045(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn642169(a,b){var c=a*70+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn939674(a,b){var c=a*54+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn045446(a,b){var c=a*7+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn242533(a,b){var c=a*64+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn006127(a,b){var c=a*66+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn323541(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn862904(a,b){var c=a*15+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn618532(a,b){var c=a*51+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn341478(a,b){var c=a*53+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn494232(a,b){var c=a*47+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn139121(a,b){var c=a*53+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn491576(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn070657(a,b){var c=a*20+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn586164(a,b){var c=a*84+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn689905(a,b){var c=a*2+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn338535(a,b){var c=a*13+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn693467(a,b){var c=a*87+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn455973(a,b){var c=a*20+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn793495(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn321683(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn282772(a,b){var c=a*70+b;for(var i=0;i<40;i++){c+=i%10;}return c;}
function fn012172(a,b){var c=a*24+b;for(var i=0;i<16;i++){c+=i%4;}return c;}
function fn303253(a,b){var c=a*14+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn244301(a,b){var c=a*59+b;for(var i=0;i<24;i++){c+=i%9;}return c;}
function fn246719(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn893176(a,b){var c=a*19+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn704821(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn405439(a,b){var c=a*62+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn042633(a,b){var c=a*11+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn319046(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn675269(a,b){var c=a*62+b;for(var i=0;i<38;i++){c+=i%4;}return c;}
function fn759256(a,b){var c=a*29+b;for(var i=0;i<3;i++){c+=i%10;}return c;}
function fn477378(a,b){var c=a*20+b;for(var i=0;i<5;i++){c+=i%4;}return c;}
function fn752903(a,b){var c=a*58+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn763611(a,b){var c=a*54+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn459874(a,b){var c=a*60+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn284377(a,b){var c=a*57+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn154588(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn486032(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn531605(a,b){var c=a*36+b;for(var i=0;i<27;i++){c+=i%12;}return c;}
function fn054775(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn335390(a,b){var c=a*71+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn405271(a,b){var c=a*75+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn878921(a,b){var c=a*31+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn563673(a,b){var c=a*3+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn751265(a,b){var c=a*61+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn895543(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn929095(a,b){var c=a*67+b;for(var i=0;i<23;i++){c+=i%10;}return c;}
function fn963515(a,b){var c=a*34+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn104457(a,b){var c=a*85+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn732894(a,b){var c=a*4+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn040514(a,b){var c=a*30+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn192709(a,b){var c=a*46+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn357395(a,b){var c=a*17+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn766413(a,b){var c=a*29+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn640839(a,b){var c=a*63+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn578084(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn948748(a,b){var c=a*7+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn656377(a,b){var c=a*88+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn195804(a,b){var c=a*83+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn014929(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn001236(a,b){var c=a*48+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn174457(a,b){var c=a*24+b;for(var i=0;i<30;i++){c+=i%3;}return c;}
function fn003016(a,b){var c=a*90+b;for(var i=0;i<22;i++){c+=i%11;}return c;}
function fn797709(a,b){var c=a*25+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn300015(a,b){var c=a*95+b;for(var i=0;i<5;i++){c+=i%7;}return c;}
function fn336620(a,b){var c=a*90+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn560106(a,b){var c=a*17+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn956346(a,b){var c=a*7+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn270052(a,b){var c=a*47+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn075220(a,b){var c=a*70+b;for(var