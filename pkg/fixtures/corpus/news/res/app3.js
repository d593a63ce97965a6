function fn741727(a,b){var c=a*4+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn224168(a,b){var c=a*21+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn889785(a,b){var c=a*80+b;for(var i=0;i<22;i++){c+=i%5;}return c;}
function fn517447(a,b){var c=a*72+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn462746(a,b){var c=a*56+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn208979(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn009413(a,b){var c=a*21+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn539509(a,b){var c=a*22+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn654796(a,b){var c=a*63+b;for(var i=0;i<9;i++){c+=i%8;}return c;}
function fn300602(a,b){var c=a*83+b;for(var i=0;i<31;i++){c+=i%2;}return c;}
function fn082109(a,b){var c=a*87+b;for(var i=0;i<39;i++){c+=i%3;}return c;}
function fn861751(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn335898(a,b){var c=a*90+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn473613(a,b){var c=a*4+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn566121(a,b){var c=a*33+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn363086(a,b){var c=a*18+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn038953(a,b){var c=a*73+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn085663(a,b){var c=a*50+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn658305(a,b){var c=a*46+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn648576(a,b){var c=a*29+b;for(var i=0;i<23;i++){c+=i%5;}return c;}
function fn107146(a,b){var c=a*46+b;for(var i=0;i<10;i++){c+=i%10;}return c;}
function fn014120(a,b){var c=a*5+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn408367(a,b){var c=a*25+b;for(var i=0;i<23;i++){c+=i%3;}return c;}
function fn276232(a,b){var c=a*83+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn799480(a,b){var c=a*71+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn801899(a,b){var c=a*85+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn141625(a,b){var c=a*67+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn845344(a,b){var c=a*94+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn429482(a,b){var c=a*41+b;for(var i=0;i<24;i++){c+=i%2;}return c;}
function fn674266(a,b){var c=a*93+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn568108(a,b){var c=a*58+b;for(var i=0;i<18;i++){c+=i%9;}return c;}
function fn992797(a,b){var c=a*24+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn156492(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%3;}return c;}
function fn395920(a,b){var c=a*56+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn984698(a,b){var c=a*65+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn611199(a,b){var c=a*81+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn675354(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn958339(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn474764(a,b){var c=a*87+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn288252(a,b){var c=a*16+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn056933(a,b){var c=a*87+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn729689(a,b){var c=a*12+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn584243(a,b){var c=a*27+b;for(var i=0;i<17;i++){c+=i%2;}return c;}
function fn487150(a,b){var c=a*16+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn363284(a,b){var c=a*76+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn725312(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%4;}return c;}
function fn010713(a,b){var c=a*16+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn238450(a,b){var c=a*61+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn536050(a,b){var c=a*42+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn592627(a,b){var c=a*72+b;for(var i=0;i<31;i++){c+=i%3;}return c;}
function fn267935(a,b){var c=a*79+b;for(var i=0;i<23;i++){c+=i%11;}return c;}
function fn183355(a,b){var c=a*41+b;for(var i=0;i<14;i++){c+=i%7;}return c;}
function fn518305(a,b){var c=a*43+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn042794(a,b){var c=a*89+b;for(var i=0;i<11;i++){c+=i%9;}return c;}
function fn371353(a,b){var c=a*37+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn352656(a,b){var c=a*41+b;for(var i=0;i<3;i++){c+=i%5;}return c;}
function fn099922(a,b){var c=a*5+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn290891(a,b){var c=a*55+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn406423(a,b){var c=a*5+b;for(var i=0;i<20;i++){c+=i%4;}return c;}
function fn935459(a,b){var c=a*63+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn735760(a,b){var c=a*42+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn996391(a,b){var c=a*4+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn499017(a,b){var c=a*8+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn571186(a,b){var c=a*53+b;for(var i=0;i<9;i++){c+=i%5;}return c;}
function fn786737(a,b){var c=a*2+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn098926(a,b){var c=a*81+b;for(var i=0;i<4;i++){c+=i%10;}return c;}
function fn279669(a,b){var c=a*84+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn616357(a,b){var c=a*63+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn892939(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn439875(a,b){var c=a*57+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn083342(a,b){var c=a*12+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn108276(a,b){var c=a*79+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn728371(a,b){var c=a*40+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn749337(a,b){var c=a*40+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn184673(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%12;}return c;}
function fn012358(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%7;}return c;}
function fn748149(a,b){var c=a*41+b;for(var i=0;i<25;i++){c+=i%4;}return c;}
function fn051695(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn080459(a,b){var c=a*21+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn480197(a,b){var c=a*88+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn799303(a,b){var c=a*59+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn391888(a,b){var c=a*15+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn606684(a,b){var c=a*33+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn423086(a,b){var c=a*73+b;for(var i=0;i<5;i++){c+=i%3;}return c;}
function fn825439(a,b){var c=a*5+b;for(var i=0;i<10;i++){c+=i%5;}return c;}
function fn932042(a,b){var c=a*12+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn223425(a,b){var c=a*32+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn623753(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn735594(a,b){var c=a*45+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn444247(a,b){var c=a*96+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn589575(a,b){var c=a*68+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn283804(a,b){var c=a*40+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn169686(a,b){var c=a*51+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn448009(a,b){var c=a*57+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn158615(a,b){var c=a*11+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn459562(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn528376(a,b){var c=a*68+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn930489(a,b){var c=a*87+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn438171(a,b){var c=a*67+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn794682(a,b){var c=a*4+b;for(var i=0;i<3;i++){c+=i%11;}return c;}
function fn477209(a,b){var c=a*91+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn233485(a,b){var c=a*55+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn909109(a,b){var c=a*4+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn685420(a,b){var c=a*8+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn234568(a,b){var c=a*18+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn644820(a,b){var c=a*25+b;for(var i=0;i<37;i++){c+=i%13;}return c;}
function fn199359(a,b){var c=a*25+b;for(var i=0;i<21;i++){c+=i%2;}return c;}
function fn520899(a,b){var c=a*57+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn777382(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn880131(a,b){var c=a*66+b;for(var i=0;i<38;i++){c+=i%9;}return c;}
function fn898843(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn050808(a,b){var c=a*77+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn461440(a,b){var c=a*95+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn925824(a,b){var c=a*35+b;for(var i=0;i<13;i++){c+=i%7;}return c;}
function fn329698(a,b){var c=a*43+b;for(var i=0;i<16;i++){c+=i%6;}return c;}
function fn935321(a,b){var c=a*41+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn231021(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn671045(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%9;}return c;}
function fn660796(a,b){var c=a*64+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn499536(a,b){var c=a*21+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn716469(a,b){var c=a*69+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn576718(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%4;}return c;}
function fn685275(a,b){var c=a*47+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn519200(a,b){var c=a*90+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn804971(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn262291(a,b){var c=a*12+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn889614(a,b){var c=a*81+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn052016(a,b){var c=a*4+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn522708(a,b){var c=a*54+b;for(var i=0;i<30;i++){c+=i%9;}return c;}
function fn085537(a,b){var c=a*70+b;for(var i=0;i<5;i++){c+=i%13;}return c;}
function fn181806(a,b){var c=a*33+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn190937(a,b){var c=a*87+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn174136(a,b){var c=a*39+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn586589(a,b){var c=a*4+b;for(var i=0;i<14;i++){c+=i%9;}return c;}
function fn424411(a,b){var c=a*30+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn565272(a,b){var c=a*71+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn663577(a,b){var c=a*2+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn234072(a,b){var c=a*29+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn659186(a,b){var c=a*69+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn390811(a,b){var c=a*84+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn125731(a,b){var c=a*73+b;for(var i=0;i<34;i++){c+=i%2;}return c;}
function fn874544(a,b){var c=a*84+b;for(var i=0;i<37;i++){c+=i%8;}return c;}
function fn185652(a,b){var c=a*60+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn070471(a,b){var c=a*96+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn679860(a,b){var c=a*61+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn082265(a,b){var c=a*2+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn629662(a,b){var c=a*50+b;for(var i=0;i<37;i++){c+=i%7;}return c;}
function fn352754(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%7;}return c;}
function fn026038(a,b){var c=a*19+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn617020(a,b){var c=a*26+b;for(var i=0;i<33;i++){c+=i%3;}return c;}
function fn433606(a,b){var c=a*90+b;for(var i=0;i<16;i++){c+=i%9;}return c;}
function fn858137(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%8;}return c;}
function fn213691(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn903020(a,b){var c=a*89+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn411746(a,b){var c=a*51+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn834655(a,b){var c=a*44+b;for(var i=0;i<34;i++){c+=i%9;}return c;}
function fn986347(a,b){var c=a*50+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn585945(a,b){var c=a*6+b;for(var i=0;i<29;i++){c+=i%3;}return c;}
function fn446782(a,b){var c=a*24+b;for(var i=0;i<3;i++){c+=i%9;}return c;}
function fn001361(a,b){var c=a*83+b;for(var i=0;i<5;i++){c+=i%9;}return c;}
function fn764990(a,b){var c=a*81+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn932385(a,b){var c=a*93+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn256970(a,b){var c=a*23+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn187778(a,b){var c=a*3+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn127100(a,b){var c=a*17+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn298931(a,b){var c=a*73+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn926591(a,b){var c=a*93+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn183568(a,b){var c=a*77+b;for(var i=0;i<12;i++){c+=i%2;}return c;}
function fn428082(a,b){var c=a*62+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn238630(a,b){var c=a*59+b;for(var i=0;i<28;i++){c+=i%12;}return c;}
function fn780597(a,b){var c=a*12+b;for(var i=0;i<17;i++){c+=i%8;}return c;}
function fn734814(a,b){var c=a*60+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn958843(a,b){var c=a*19+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn369592(a,b){var c=a*13+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn248679(a,b){var c=a*9+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn976055(a,b){var c=a*87+b;for(var i=0;i<19;i++){c+=i%10;}return c;}
function fn934348(a,b){var c=a*37+b;for(var i=0;i<17;i++){c+=i%5;}return c;}
function fn222331(a,b){var c=a*13+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn055421(a,b){var c=a*86+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn200935(a,b){var c=a*18+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn515513(a,b){var c=a*73+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn229774(a,b){var c=a*65+b;for(var i=0;i<11;i++){c+=i%12;}return c;}
function fn477143(a,b){var c=a*79+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn950130(a,b){var c=a*30+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn303389(a,b){var c=a*36+b;for(var i=0;i<7;i++){c+=i%10;}return c;}
function fn510419(a,b){var c=a*85+b;for(var i=0;i<18;i++){c+=i%2;}return c;}
function fn136086(a,b){var c=a*31+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn839192(a,b){var c=a*51+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn186058(a,b){var c=a*80+b;for(var i=0;i<35;i++){c+=i%9;}return c;}
function fn566676(a,b){var c=a*68+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn682136(a,b){var c=a*5+b;for(var i=0;i<17;i++){c+=i%4;}return c;}
function fn498182(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn452678(a,b){var c=a*20+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn509921(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn984035(a,b){var c=a*11+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn243593(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%9;}return c;}
function fn661277(a,b){var c=a*10+b;for(var i=0;i<30;i++){c+=i%11;}return c;}
function fn126909(a,b){var c=a*80+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn764551(a,b){var c=a*97+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn312303(a,b){var c=a*81+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn832746(a,b){var c=a*42+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn424866(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%2;}return c;}
function fn172162(a,b){var c=a*69+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn056894(a,b){var c=a*10+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn956637(a,b){var c=a*13+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn959318(a,b){var c=a*32+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn883760(a,b){var c=a*61+b;for(var i=0;i<7;i++){c+=i%2;}return c;}
function fn664227(a,b){var c=a*43+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn224438(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn962438(a,b){var c=a*85+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn413796(a,b){var c=a*46+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn232183(a,b){var c=a*72+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn334860(a,b){var c=a*12+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn410436(a,b){var c=a*49+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn195890(a,b){var c=a*82+b;for(var i=0;i<38;i++){c+=i%12;}return c;}
function fn078577(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn141907(a,b){var c=a*9+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn786882(a,b){var c=a*3+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn677060(a,b){var c=a*56+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn434801(a,b){var c=a*42+b;for(var i=0;i<23;i++){c+=i%12;}return c;}
function fn730454(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn241823(a,b){var c=a*19+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn989392(a,b){var c=a*59+b;for(var i=0;i<14;i++){c+=i%8;}return c;}
function fn640840(a,b){var c=a*36+b;for(var i=0;i<34;i++){c+=i%7;}return c;}
function fn415704(a,b){var c=a*44+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn214772(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn202581(a,b){var c=a*92+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn354207(a,b){var c=a*41+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn664746(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn115788(a,b){var c=a*43+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn821373(a,b){var c=a*55+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn599399(a,b){var c=a*37+b;for(var i=0;i<32;i++){c+=i%3;}return c;}
function fn361697(a,b){var c=a*51+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn147887(a,b){var c=a*70+b;for(var i=0;i<9;i++){c+=i%13;}return c;}
function fn964467(a,b){var c=a*80+b;for(var i=0;i<7;i++){c+=i%9;}return c;}
function fn888472(a,b){var c=a*36+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn329414(a,b){var c=a*55+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn483679(a,b){var c=a*6+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn949703(a,b){var c=a*39+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn134310(a,b){var c=a*31+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn521109(a,b){var c=a*66+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn710919(a,b){var c=a*64+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn744393(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%11;}return c;}
function fn138544(a,b){var c=a*72+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn629199(a,b){var c=a*22+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn317100(a,b){var c=a*19+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn283297(a,b){var c=a*54+b;for(var i=0;i<36;i++){c+=i%4;}return c;}
function fn603976(a,b){var c=a*74+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn122036(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn473563(a,b){var c=a*7+b;for(var i=0;i<7;i++){c+=i%5;}return c;}
function fn906958(a,b){var c=a*44+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn035402(a,b){var c=a*76+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn893347(a,b){var c=a*33+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn251214(a,b){var c=a*79+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn407220(a,b){var c=a*50+b;for(var i=0;i<8;i++){c+=i%6;}return c;}
function fn445486(a,b){var c=a*9+b;for(var i=0;i<14;i++){c+=i%4;}return c;}
function fn450382(a,b){var c=a*33+b;for(var i=0;i<39;i++){c+=i%9;}return c;}
function fn416107(a,b){var c=a*35+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn890120(a,b){var c=a*36+b;for(var i=0;i<24;i++){c+=i%13;}return c;}
function fn517192(a,b){var c=a*86+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn709641(a,b){var c=a*48+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn599750(a,b){var c=a*92+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn256905(a,b){var c=a*80+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn796641(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%13;}return c;}
function fn415356(a,b){var c=a*78+b;for(var i=0;i<21;i++){c+=i%10;}return c;}
function fn854897(a,b){var c=a*71+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn663614(a,b){var c=a*77+b;for(var i=0;i<28;i++){c+=i%8;}return c;}
function fn137070(a,b){var c=a*31+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn189193(a,b){var c=a*66+b;for(var i=0;i<14;i++){c+=i%10;}return c;}
function fn193736(a,b){var c=a*9+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn655230(a,b){var c=a*66+b;for(var i=0;i<17;i++){c+=i%11;}return c;}
function fn700102(a,b){var c=a*64+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn814958(a,b){var c=a*42+b;for(var i=0;i<28;i++){c+=i%11;}return c;}
function fn591034(a,b){var c=a*96+b;for(var i=0;i<13;i++){c+=i%4;}return c;}
function fn772417(a,b){var c=a*28+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn247472(a,b){var c=a*31+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn512785(a,b){var c=a*89+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn826862(a,b){var c=a*62+b;for(var i=0;i<39;i++){c+=i%10;}return c;}
function fn275386(a,b){var c=a*16+b;for(var i=0;i<15;i++){c+=i%7;}return c;}
function fn021943(a,b){var c=a*35+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn269697(a,b){var c=a*37+b;for(var i=0;i<4;i++){c+=i%7;}return c;}
function fn391397(a,b){var c=a*11+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn744006(a,b){var c=a*73+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn661946(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn919611(a,b){var c=a*9+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn727323(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%13;}return c;}
function fn804299(a,b){var c=a*34+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn384811(a,b){var c=a*59+b;for(var i=0;i<12;i++){c+=i%5;}return c;}
function fn832539(a,b){var c=a*50+b;for(var i=0;i<3;i++){c+=i%3;}return c;}
function fn650226(a,b){var c=a*23+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn641066(a,b){var c=a*65+b;for(var i=0;i<28;i++){c+=i%6;}return c;}
function fn281409(a,b){var c=a*25+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn767419(a,b){var c=a*40+b;for(var i=0;i<22;i++){c+=i%3;}return c;}
function fn767222(a,b){var c=a*56+b;for(var i=0;i<35;i++){c+=i%2;}return c;}
function fn948750(a,b){var c=a*6+b;for(var i=0;i<10;i++){c+=i%9;}return c;}
function fn696137(a,b){var c=a*26+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn889593(a,b){var c=a*85+b;for(var i=0;i<10;i++){c+=i%4;}return c;}
function fn361784(a,b){var c=a*34+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn827443(a,b){var c=a*48+b;for(var i=0;i<24;i++){c+=i%4;}return c;}
function fn879097(a,b){var c=a*28+b;for(var i=0;i<21;i++){c+=i%4;}return c;}
function fn105169(a,b){var c=a*7+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn563882(a,b){var c=a*32+b;for(var i=0;i<5;i++){c+=i%10;}return c;}
function fn826869(a,b){var c=a*23+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn470035(a,b){var c=a*65+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn514201(a,b){var c=a*68+b;for(var i=0;i<37;i++){c+=i%9;}return c;}
function fn732833(a,b){var c=a*9+b;for(var i=0;i<13;i++){c+=i%5;}return c;}
function fn663740(a,b){var c=a*64+b;for(var i=0;i<36;i++){c+=i%2;}return c;}
function fn840773(a,b){var c=a*80+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn231793(a,b){var c=a*44+b;for(var i=0;i<35;i++){c+=i%8;}return c;}
function fn440497(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn556204(a,b){var c=a*48+b;for(var i=0;i<25;i++){c+=i%5;}return c;}
function fn481727(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn604394(a,b){var c=a*74+b;for(var i=0;i<23;i++){c+=i%8;}return c;}
function fn377314(a,b){var c=a*8+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn804583(a,b){var c=a*65+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn688969(a,b){var c=a*52+b;for(var i=0;i<32;i++){c+=i%12;}return c;}
function fn121926(a,b){var c=a*70+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn526804(a,b){var c=a*76+b;for(var i=0;i<19;i++){c+=i%12;}return c;}
function fn160003(a,b){var c=a*70+b;for(var i=0;i<33;i++){c+=i%7;}return c;}
function fn822288(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn056750(a,b){var c=a*87+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn959910(a,b){var c=a*12+b;for(var i=0;i<14;i++){c+=i%6;}return c;}
function fn293953(a,b){var c=a*66+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn440863(a,b){var c=a*46+b;for(var i=0;i<36;i++){c+=i%7;}return c;}
function fn797076(a,b){var c=a*42+b;for(var i=0;i<33;i++){c+=i%6;}return c;}
function fn477700(a,b){var c=a*21+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn057206(a,b){var c=a*61+b;for(var i=0;i<29;i++){c+=i%4;}return c;}
function fn654871(a,b){var c=a*66+b;for(var i=0;i<23;i++){c+=i%4;}return c;}
function fn019581(a,b){var c=a*13+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn648468(a,b){var c=a*42+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn538507(a,b){var c=a*11+b;for(var i=0;i<26;i++){c+=i%9;}return c;}
function fn138182(a,b){var c=a*4+b;for(var i=0;i<24;i++){c+=i%7;}return c;}
function fn806934(a,b){var c=a*44+b;for(var i=0;i<33;i++){c+=i%11;}return c;}
function fn061728(a,b){var c=a*70+b;for(var i=0;i<20;i++){c+=i%9;}return c;}
function fn745270(a,b){var c=a*24+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn967780(a,b){var c=a*50+b;for(var i=0;i<7;i++){c+=i%11;}return c;}
function fn555439(a,b){var c=a*20+b;for(var i=0;i<26;i++){c+=i%13;}return c;}
function fn631239(a,b){var c=a*35+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn144948(a,b){var c=a*42+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn531975(a,b){var c=a*60+b;for(var i=0;i<21;i++){c+=i%7;}return c;}
function fn927530(a,b){var c=a*40+b;for(var i=0;i<12;i++){c+=i%8;}return c;}
function fn057711(a,b){var c=a*48+b;for(var i=0;i<7;i++){c+=i%12;}return c;}
function fn887251(a,b){var c=a*27+b;for(var i=0;i<3;i++){c+=i%4;}return c;}
function fn566404(a,b){var c=a*34+b;for(var i=0;i<17;i++){c+=i%7;}return c;}
function fn342105(a,b){var c=a*45+b;for(var i=0;i<26;i++){c+=i%10;}return c;}
function fn846653(a,b){var c=a*66+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn041932(a,b){var c=a*81+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn568626(a,b){var c=a*77+b;for(var i=0;i<33;i++){c+=i%2;}return c;}
function fn090059(a,b){var c=a*10+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn418887(a,b){var c=a*81+b;for(var i=0;i<27;i++){c+=i%9;}return c;}
function fn349606(a,b){var c=a*24+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn202029(a,b){var c=a*14+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn365035(a,b){var c=a*42+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn368829(a,b){var c=a*94+b;for(var i=0;i<30;i++){c+=i%13;}return c;}
function fn363225(a,b){var c=a*55+b;for(var i=0;i<20;i++){c+=i%8;}return c;}
function fn968775(a,b){var c=a*62+b;for(var i=0;i<26;i++){c+=i%2;}return c;}
function fn038348(a,b){var c=a*68+b;for(var i=0;i<14;i++){c+=i%13;}return c;}
function fn942281(a,b){var c=a*27+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn451725(a,b){var c=a*34+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn698719(a,b){var c=a*41+b;for(var i=0;i<3;i++){c+=i%6;}return c;}
function fn767347(a,b){var c=a*10+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn968972(a,b){var c=a*89+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn800584(a,b){var c=a*88+b;for(var i=0;i<3;i++){c+=i%8;}return c;}
function fn519445(a,b){var c=a*6+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn345239(a,b){var c=a*45+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn013949(a,b){var c=a*4+b;for(var i=0;i<18;i++){c+=i%11;}return c;}
function fn435921(a,b){var c=a*73+b;for(var i=0;i<27;i++){c+=i%7;}return c;}
function fn162166(a,b){var c=a*73+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn797031(a,b){var c=a*22+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn077051(a,b){var c=a*38+b;for(var i=0;i<13;i++){c+=i%11;}return c;}
function fn144053(a,b){var c=a*13+b;for(var i=0;i<26;i++){c+=i%12;}return c;}
function fn802769(a,b){var c=a*93+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn811201(a,b){var c=a*41+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn839838(a,b){var c=a*53+b;for(var i=0;i<34;i++){c+=i%3;}return c;}
function fn833465(a,b){var c=a*30+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn917572(a,b){var c=a*10+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn848060(a,b){var c=a*4+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn905177(a,b){var c=a*61+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn613017(a,b){var c=a*59+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn394669(a,b){var c=a*48+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn783123(a,b){var c=a*9+b;for(var i=0;i<6;i++){c+=i%7;}return c;}
function fn296497(a,b){var c=a*3+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn464000(a,b){var c=a*28+b;for(var i=0;i<23;i++){c+=i%13;}return c;}
function fn261237(a,b){var c=a*96+b;for(var i=0;i<39;i++){c+=i%2;}return c;}
function fn898614(a,b){var c=a*75+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn083895(a,b){var c=a*17+b;for(var i=0;i<34;i++){c+=i%11;}return c;}
function fn004015(a,b){var c=a*64+b;for(var i=0;i<21;i++){c+=i%8;}return c;}
function fn893621(a,b){var c=a*93+b;for(var i=0;i<20;i++){c+=i%6;}return c;}
function fn553692(a,b){var c=a*21+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn760976(a,b){var c=a*28+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn985889(a,b){var c=a*67+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn375456(a,b){var c=a*40+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn644772(a,b){var c=a*83+b;for(var i=0;i<28;i++){c+=i%7;}return c;}
function fn195413(a,b){var c=a*58+b;for(var i=0;i<10;i++){c+=i%13;}return c;}
function fn193715(a,b){var c=a*38+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn827541(a,b){var c=a*20+b;for(var i=0;i<19;i++){c+=i%8;}return c;}
function fn964233(a,b){var c=a*70+b;for(var i=0;i<24;i++){c+=i%5;}return c;}
function fn136885(a,b){var c=a*14+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn952640(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn913882(a,b){var c=a*50+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn652618(a,b){var c=a*78+b;for(var i=0;i<16;i++){c+=i%10;}return c;}
function fn534501(a,b){var c=a*50+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn395576(a,b){var c=a*79+b;for(var i=0;i<29;i++){c+=i%2;}return c;}
function fn715293(a,b){var c=a*52+b;for(var i=0;i<37;i++){c+=i%3;}return c;}
function fn683575(a,b){var c=a*3+b;for(var i=0;i<32;i++){c+=i%4;}return c;}
function fn673463(a,b){var c=a*14+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn646729(a,b){var c=a*12+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn726947(a,b){var c=a*4+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn452327(a,b){var c=a*33+b;for(var i=0;i<40;i++){c+=i%2;}return c;}
function fn187148(a,b){var c=a*53+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn015987(a,b){var c=a*78+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn324087(a,b){var c=a*47+b;for(var i=0;i<8;i++){c+=i%12;}return c;}
function fn821285(a,b){var c=a*21+b;for(var i=0;i<33;i++){c+=i%9;}return c;}
function fn392597(a,b){var c=a*89+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn638978(a,b){var c=a*56+b;for(var i=0;i<6;i++){c+=i%9;}return c;}
function fn234135(a,b){var c=a*49+b;for(var i=0;i<8;i++){c+=i%4;}return c;}
function fn151644(a,b){var c=a*79+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn529628(a,b){var c=a*88+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn316978(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn186478(a,b){var c=a*17+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn889847(a,b){var c=a*66+b;for(var i=0;i<25;i++){c+=i%11;}return c;}
function fn276249(a,b){var c=a*16+b;for(var i=0;i<17;i++){c+=i%13;}return c;}
function fn688546(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%13;}return c;}
function fn913575(a,b){var c=a*83+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn195219(a,b){var c=a*82+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn373844(a,b){var c=a*49+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn473016(a,b){var c=a*71+b;for(var i=0;i<17;i++){c+=i%9;}return c;}
function fn497884(a,b){var c=a*38+b;for(var i=0;i<25;i++){c+=i%12;}return c;}
function fn360206(a,b){var c=a*65+b;for(var i=0;i<25;i++){c+=i%3;}return c;}
function fn936984(a,b){var c=a*92+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn231599(a,b){var c=a*41+b;for(var i=0;i<11;i++){c+=i%5;}return c;}
function fn655251(a,b){var c=a*90+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn949669(a,b){var c=a*32+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn712178(a,b){var c=a*91+b;for(var i=0;i<13;i++){c+=i%8;}return c;}
function fn938790(a,b){var c=a*21+b;for(var i=0;i<18;i++){c+=i%3;}return c;}
function fn568017(a,b){var c=a*86+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn407192(a,b){var c=a*30+b;for(var i=0;i<18;i++){c+=i%4;}return c;}
function fn689689(a,b){var c=a*37+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn473173(a,b){var c=a*82+b;for(var i=0;i<21;i++){c+=i%12;}return c;}
function fn844644(a,b){var c=a*20+b;for(var i=0;i<9;i++){c+=i%10;}return c;}
function fn611031(a,b){var c=a*63+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn262263(a,b){var c=a*16+b;for(var i=0;i<10;i++){c+=i%7;}return c;}
function fn566261(a,b){var c=a*96+b;for(var i=0;i<38;i++){c+=i%6;}return c;}
function fn631439(a,b){var c=a*27+b;for(var i=0;i<40;i++){c+=i%3;}return c;}
function fn734309(a,b){var c=a*92+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn759239(a,b){var c=a*86+b;for(var i=0;i<6;i++){c+=i%12;}return c;}
function fn549257(a,b){var c=a*49+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn713113(a,b){var c=a*30+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn981843(a,b){var c=a*36+b;for(var i=0;i<23;i++){c+=i%9;}return c;}
function fn783780(a,b){var c=a*33+b;for(var i=0;i<22;i++){c+=i%2;}return c;}
function fn039842(a,b){var c=a*20+b;for(var i=0;i<4;i++){c+=i%12;}return c;}
function fn437510(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%7;}return c;}
function fn502769(a,b){var c=a*18+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn741541(a,b){var c=a*2+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn539575(a,b){var c=a*23+b;for(var i=0;i<30;i++){c+=i%6;}return c;}
function fn734267(a,b){var c=a*13+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn939965(a,b){var c=a*79+b;for(var i=0;i<3;i++){c+=i%2;}return c;}
function fn198274(a,b){var c=a*31+b;for(var i=0;i<37;i++){c+=i%10;}return c;}
function fn062661(a,b){var c=a*84+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn065384(a,b){var c=a*76+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn554207(a,b){var c=a*40+b;for(var i=0;i<27;i++){c+=i%11;}return c;}
function fn345436(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn853740(a,b){var c=a*59+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn065594(a,b){var c=a*4+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn429759(a,b){var c=a*42+b;for(var i=0;i<30;i++){c+=i%5;}return c;}
function fn400913(a,b){var c=a*73+b;for(var i=0;i<20;i++){c+=i%12;}return c;}
function fn271036(a,b){var c=a*71+b;for(var i=0;i<25;i++){c+=i%13;}return c;}
function fn352804(a,b){var c=a*7+b;for(var i=0;i<32;i++){c+=i%8;}return c;}
function fn903214(a,b){var c=a*25+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn149683(a,b){var c=a*66+b;for(var i=0;i<11;i++){c+=i%2;}return c;}
function fn282036(a,b){var c=a*17+b;for(var i=0;i<18;i++){c+=i%8;}return c;}
function fn171055(a,b){var c=a*5+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn517729(a,b){var c=a*5+b;for(var i=0;i<18;i++){c+=i%6;}return c;}
function fn088498(a,b){var c=a*59+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn683485(a,b){var c=a*77+b;for(var i=0;i<32;i++){c+=i%9;}return c;}
function fn191268(a,b){var c=a*31+b;for(var i=0;i<29;i++){c+=i%12;}return c;}
function fn424587(a,b){var c=a*42+b;for(var i=0;i<36;i++){c+=i%6;}return c;}
function fn112121(a,b){var c=a*8+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn256451(a,b){var c=a*24+b;f