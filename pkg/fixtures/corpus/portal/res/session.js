function fn406378(a,b){var c=a*23+b;for(var i=0;i<20;i++){c+=i%5;}return c;}
function fn810758(a,b){var c=a*56+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn035370(a,b){var c=a*53+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn663901(a,b){var c=a*44+b;for(var i=0;i<31;i++){c+=i%13;}return c;}
function fn249149(a,b){var c=a*66+b;for(var i=0;i<30;i++){c+=i%2;}return c;}
function fn659105(a,b){var c=a*23+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn215297(a,b){var c=a*87+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn244332(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%3;}return c;}
function fn075727(a,b){var c=a*91+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn240370(a,b){var c=a*96+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn009209(a,b){var c=a*88+b;for(var i=0;i<32;i++){c+=i%11;}return c;}
function fn352258(a,b){var c=a*5+b;for(var i=0;i<37;i++){c+=i%4;}return c;}
function fn809918(a,b){var c=a*31+b;for(var i=0;i<6;i++){c+=i%3;}return c;}
function fn535364(a,b){var c=a*19+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn433705(a,b){var c=a*93+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn776828(a,b){var c=a*9+b;for(var i=0;i<22;i++){c+=i%9;}return c;}
function fn185471(a,b){var c=a*83+b;for(var i=0;i<27;i++){c+=i%6;}return c;}
function fn315647(a,b){var c=a*91+b;for(var i=0;i<16;i++){c+=i%8;}return c;}
function fn534306(a,b){var c=a*44+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn983850(a,b){var c=a*44+b;for(var i=0;i<9;i++){c+=i%2;}return c;}
function fn303536(a,b){var c=a*83+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn805855(a,b){var c=a*11+b;for(var i=0;i<22;i++){c+=i%13;}return c;}
function fn184517(a,b){var c=a*40+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn406740(a,b){var c=a*90+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn728643(a,b){var c=a*83+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn746971(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn138126(a,b){var c=a*73+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn839933(a,b){var c=a*66+b;for(var i=0;i<32;i++){c+=i%7;}return c;}
function fn309391(a,b){var c=a*6+b;for(var i=0;i<22;i++){c+=i%12;}return c;}
function fn427681(a,b){var c=a*67+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn534948(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%8;}return c;}
function fn043658(a,b){var c=a*93+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn865815(a,b){var c=a*18+b;for(var i=0;i<15;i++){c+=i%10;}return c;}
function fn167915(a,b){var c=a*86+b;for(var i=0;i<19;i++){c+=i%7;}return c;}
function fn033513(a,b){var c=a*95+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn743853(a,b){var c=a*19+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn054081(a,b){var c=a*52+b;for(var i=0;i<6;i++){c+=i%2;}return c;}
function fn579879(a,b){var c=a*55+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn274571(a,b){var c=a*19+b;for(var i=0;i<39;i++){c+=i%5;}return c;}
function fn801311(a,b){var c=a*34+b;for(var i=0;i<23;i++){c+=i%6;}return c;}
function fn085667(a,b){var c=a*11+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn655449(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%11;}return c;}
function fn122157(a,b){var c=a*42+b;for(var i=0;i<29;i++){c+=i%7;}return c;}
function fn872575(a,b){var c=a*81+b;for(var i=0;i<6;i++){c+=i%13;}return c;}
function fn498986(a,b){var c=a*86+b;for(var i=0;i<18;i++){c+=i%13;}return c;}
function fn503382(a,b){var c=a*2+b;for(var i=0;i<30;i++){c+=i%4;}return c;}
function fn122556(a,b){var c=a*56+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn924057(a,b){var c=a*84+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn095082(a,b){var c=a*54+b;for(var i=0;i<24;i++){c+=i%3;}return c;}
function fn802799(a,b){var c=a*9+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn205244(a,b){var c=a*43+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn973412(a,b){var c=a*19+b;for(var i=0;i<40;i++){c+=i%12;}return c;}
function fn895353(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn110085(a,b){var c=a*80+b;for(var i=0;i<28;i++){c+=i%2;}return c;}
function fn743265(a,b){var c=a*83+b;for(var i=0;i<24;i++){c+=i%6;}return c;}
function fn540086(a,b){var c=a*10+b;for(var i=0;i<22;i++){c+=i%8;}return c;}
function fn872855(a,b){var c=a*73+b;for(var i=0;i<4;i++){c+=i%13;}return c;}
function fn027625(a,b){var c=a*29+b;for(var i=0;i<14;i++){c+=i%11;}return c;}
function fn814215(a,b){var c=a*46+b;for(var i=0;i<12;i++){c+=i%10;}return c;}
function fn808547(a,b){var c=a*74+b;for(var i=0;i<19;i++){c+=i%9;}return c;}
function fn887821(a,b){var c=a*14+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn625318(a,b){var c=a*50+b;for(var i=0;i<40;i++){c+=i%5;}return c;}
function fn666281(a,b){var c=a*3+b;for(var i=0;i<28;i++){c+=i%10;}return c;}
function fn957484(a,b){var c=a*33+b;for(var i=0;i<37;i++){c+=i%6;}return c;}
function fn338361(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn563262(a,b){var c=a*36+b;for(var i=0;i<6;i++){c+=i%5;}return c;}
function fn893302(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn778231(a,b){var c=a*15+b;for(var i=0;i<4;i++){c+=i%6;}return c;}
function fn640225(a,b){var c=a*29+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn526885(a,b){var c=a*40+b;for(var i=0;i<9;i++){c+=i%9;}return c;}
function fn660820(a,b){var c=a*27+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn685910(a,b){var c=a*25+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn206152(a,b){var c=a*13+b;for(var i=0;i<4;i++){c+=i%9;}return c;}
function fn107047(a,b){var c=a*73+b;for(var i=0;i<38;i++){c+=i%3;}return c;}
function fn350772(a,b){var c=a*45+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn981348(a,b){var c=a*22+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn343354(a,b){var c=a*33+b;for(var i=0;i<25;i++){c+=i%10;}return c;}
function fn009675(a,b){var c=a*97+b;for(var i=0;i<16;i++){c+=i%3;}return c;}
function fn852832(a,b){var c=a*71+b;for(var i=0;i<30;i++){c+=i%7;}return c;}
function fn152329(a,b){var c=a*63+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn756213(a,b){var c=a*26+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn287213(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn424242(a,b){var c=a*89+b;for(var i=0;i<39;i++){c+=i%7;}return c;}
function fn934746(a,b){var c=a*29+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn978225(a,b){var c=a*72+b;for(var i=0;i<10;i++){c+=i%8;}return c;}
function fn982250(a,b){var c=a*74+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn767066(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%12;}return c;}
function fn513494(a,b){var c=a*7+b;for(var i=0;i<34;i++){c+=i%13;}return c;}
function fn287083(a,b){var c=a*6+b;for(var i=0;i<32;i++){c+=i%5;}return c;}
function fn134457(a,b){var c=a*85+b;for(var i=0;i<5;i++){c+=i%8;}return c;}
function fn748098(a,b){var c=a*40+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn616102(a,b){var c=a*2+b;for(var i=0;i<15;i++){c+=i%5;}return c;}
function fn062936(a,b){var c=a*89+b;for(var i=0;i<8;i++){c+=i%2;}return c;}
function fn903919(a,b){var c=a*88+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn914511(a,b){var c=a*31+b;for(var i=0;i<38;i++){c+=i%11;}return c;}
function fn194266(a,b){var c=a*52+b;for(var i=0;i<33;i++){c+=i%5;}return c;}
function fn389837(a,b){var c=a*62+b;for(var i=0;i<34;i++){c+=i%8;}return c;}
function fn805568(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn328565(a,b){var c=a*71+b;for(var i=0;i<16;i++){c+=i%11;}return c;}
function fn190101(a,b){var c=a*11+b;for(var i=0;i<34;i++){c+=i%12;}return c;}
function fn642336(a,b){var c=a*75+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn792743(a,b){var c=a*70+b;for(var i=0;i<15;i++){c+=i%2;}return c;}
function fn400694(a,b){var c=a*67+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn457121(a,b){var c=a*19+b;for(var i=0;i<35;i++){c+=i%11;}return c;}
function fn783616(a,b){var c=a*74+b;for(var i=0;i<35;i++){c+=i%5;}return c;}
function fn731266(a,b){var c=a*92+b;for(var i=0;i<26;i++){c+=i%11;}return c;}
function fn430783(a,b){var c=a*75+b;for(var i=0;i<39;i++){c+=i%6;}return c;}
function fn337491(a,b){var c=a*89+b;for(var i=0;i<28;i++){c+=i%5;}return c;}
function fn878687(a,b){var c=a*36+b;for(var i=0;i<8;i++){c+=i%13;}return c;}
function fn354103(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn080675(a,b){var c=a*52+b;for(var i=0;i<22;i++){c+=i%10;}return c;}
function fn116650(a,b){var c=a*15+b;for(var i=0;i<12;i++){c+=i%3;}return c;}
function fn997672(a,b){var c=a*11+b;for(var i=0;i<7;i++){c+=i%8;}return c;}
function fn496627(a,b){var c=a*76+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn040823(a,b){var c=a*21+b;for(var i=0;i<24;i++){c+=i%10;}return c;}
function fn290957(a,b){var c=a*86+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn422970(a,b){var c=a*8+b;for(var i=0;i<5;i++){c+=i%6;}return c;}
function fn336847(a,b){var c=a*92+b;for(var i=0;i<3;i++){c+=i%13;}return c;}
function fn375799(a,b){var c=a*18+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn736554(a,b){var c=a*48+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn333789(a,b){var c=a*47+b;for(var i=0;i<12;i++){c+=i%13;}return c;}
function fn529326(a,b){var c=a*3+b;for(var i=0;i<4;i++){c+=i%3;}return c;}
function fn098012(a,b){var c=a*86+b;for(var i=0;i<14;i++){c+=i%5;}return c;}
function fn825863(a,b){var c=a*59+b;for(var i=0;i<30;i++){c+=i%12;}return c;}
function fn215823(a,b){var c=a*47+b;for(var i=0;i<31;i++){c+=i%5;}return c;}
function fn853615(a,b){var c=a*74+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn996871(a,b){var c=a*92+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn982048(a,b){var c=a*54+b;for(var i=0;i<13;i++){c+=i%9;}return c;}
function fn390881(a,b){var c=a*63+b;for(var i=0;i<31;i++){c+=i%7;}return c;}
function fn922917(a,b){var c=a*63+b;for(var i=0;i<19;i++){c+=i%5;}return c;}
function fn330602(a,b){var c=a*36+b;for(var i=0;i<14;i++){c+=i%12;}return c;}
function fn945899(a,b){var c=a*23+b;for(var i=0;i<16;i++){c+=i%2;}return c;}
function fn023324(a,b){var c=a*30+b;for(var i=0;i<40;i++){c+=i%8;}return c;}
function fn333364(a,b){var c=a*11+b;for(var i=0;i<21;i++){c+=i%9;}return c;}
function fn447725(a,b){var c=a*20+b;for(var i=0;i<10;i++){c+=i%2;}return c;}
function fn484811(a,b){var c=a*22+b;for(var i=0;i<9;i++){c+=i%7;}return c;}
function fn538448(a,b){var c=a*15+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn887473(a,b){var c=a*88+b;for(var i=0;i<7;i++){c+=i%13;}return c;}
function fn757303(a,b){var c=a*30+b;for(var i=0;i<11;i++){c+=i%6;}return c;}
function fn608902(a,b){var c=a*4+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn977307(a,b){var c=a*78+b;for(var i=0;i<12;i++){c+=i%4;}return c;}
function fn286640(a,b){var c=a*9+b;for(var i=0;i<16;i++){c+=i%13;}return c;}
function fn276462(a,b){var c=a*28+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn609027(a,b){var c=a*39+b;for(var i=0;i<30;i++){c+=i%10;}return c;}
function fn562601(a,b){var c=a*35+b;for(var i=0;i<24;i++){c+=i%11;}return c;}
function fn392999(a,b){var c=a*31+b;for(var i=0;i<9;i++){c+=i%4;}return c;}
function fn035772(a,b){var c=a*47+b;for(var i=0;i<30;i++){c+=i%8;}return c;}
function fn413542(a,b){var c=a*6+b;for(var i=0;i<12;i++){c+=i%6;}return c;}
function fn899006(a,b){var c=a*74+b;for(var i=0;i<31;i++){c+=i%12;}return c;}
function fn619901(a,b){var c=a*38+b;for(var i=0;i<38;i++){c+=i%10;}return c;}
function fn056335(a,b){var c=a*93+b;for(var i=0;i<6;i++){c+=i%4;}return c;}
function fn802163(a,b){var c=a*12+b;for(var i=0;i<8;i++){c+=i%10;}return c;}
function fn165855(a,b){var c=a*91+b;for(var i=0;i<6;i++){c+=i%11;}return c;}
function fn525219(a,b){var c=a*27+b;for(var i=0;i<35;i++){c+=i%7;}return c;}
function fn272630(a,b){var c=a*76+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn876629(a,b){var c=a*7+b;for(var i=0;i<5;i++){c+=i%12;}return c;}
function fn908769(a,b){var c=a*63+b;for(var i=0;i<36;i++){c+=i%11;}return c;}
function fn928721(a,b){var c=a*42+b;for(var i=0;i<16;i++){c+=i%12;}return c;}
function fn803383(a,b){var c=a*46+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn833942(a,b){var c=a*96+b;for(var i=0;i<21;i++){c+=i%3;}return c;}
function fn299505(a,b){var c=a*13+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn293296(a,b){var c=a*70+b;for(var i=0;i<21;i++){c+=i%11;}return c;}
function fn922929(a,b){var c=a*14+b;for(var i=0;i<29;i++){c+=i%10;}return c;}
function fn380675(a,b){var c=a*78+b;for(var i=0;i<40;i++){c+=i%11;}return c;}
function fn443401(a,b){var c=a*52+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn862107(a,b){var c=a*85+b;for(var i=0;i<29;i++){c+=i%6;}return c;}
function fn055357(a,b){var c=a*80+b;for(var i=0;i<15;i++){c+=i%3;}return c;}
function fn219567(a,b){var c=a*8+b;for(var i=0;i<38;i++){c+=i%8;}return c;}
function fn783584(a,b){var c=a*28+b;for(var i=0;i<40;i++){c+=i%13;}return c;}
function fn141123(a,b){var c=a*17+b;for(var i=0;i<27;i++){c+=i%10;}return c;}
function fn234434(a,b){var c=a*38+b;for(var i=0;i<33;i++){c+=i%10;}return c;}
function fn643704(a,b){var c=a*31+b;for(var i=0;i<27;i++){c+=i%3;}return c;}
function fn753380(a,b){var c=a*40+b;for(var i=0;i<40;i++){c+=i%4;}return c;}
function fn194216(a,b){var c=a*74+b;for(var i=0;i<36;i++){c+=i%13;}return c;}
function fn095311(a,b){var c=a*85+b;for(var i=0;i<11;i++){c+=i%8;}return c;}
function fn591416(a,b){var c=a*68+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn026143(a,b){var c=a*31+b;for(var i=0;i<3;i++){c+=i%12;}return c;}
function fn286957(a,b){var c=a*68+b;for(var i=0;i<26;i++){c+=i%7;}return c;}
function fn413745(a,b){var c=a*76+b;for(var i=0;i<35;i++){c+=i%6;}return c;}
function fn829680(a,b){var c=a*64+b;for(var i=0;i<28;i++){c+=i%4;}return c;}
function fn771573(a,b){var c=a*12+b;for(var i=0;i<20;i++){c+=i%3;}return c;}
function fn601844(a,b){var c=a*54+b;for(var i=0;i<20;i++){c+=i%7;}return c;}
function fn268250(a,b){var c=a*68+b;for(var i=0;i<15;i++){c+=i%11;}return c;}
function fn727455(a,b){var c=a*61+b;for(var i=0;i<37;i++){c+=i%5;}return c;}
function fn363760(a,b){var c=a*16+b;for(var i=0;i<27;i++){c+=i%2;}return c;}
function fn296467(a,b){var c=a*73+b;for(var i=0;i<35;i++){c+=i%3;}return c;}
function fn495340(a,b){var c=a*28+b;for(var i=0;i<25;i++){c+=i%6;}return c;}
function fn983046(a,b){var c=a*28+b;for(var i=0;i<11;i++){c+=i%7;}return c;}
function fn635499(a,b){var c=a*53+b;for(var i=0;i<26;i++){c+=i%6;}return c;}
function fn890574(a,b){var c=a*26+b;for(var i=0;i<11;i++){c+=i%13;}return c;}
function fn009759(a,b){var c=a*17+b;for(var i=0;i<6;i++){c+=i%6;}return c;}
function fn264238(a,b){var c=a*80+b;for(var i=0;i<19;i++){c+=i%3;}return c;}
function fn001725(a,b){var c=a*53+b;for(var i=0;i<35;i++){c+=i%10;}return c;}
function fn976339(a,b){var c=a*92+b;for(var i=0;i<20;i++){c+=i%10;}return c;}
function fn166223(a,b){var c=a*93+b;for(var i=0;i<38;i++){c+=i%13;}return c;}
function fn995732(a,b){var c=a*45+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn185779(a,b){var c=a*41+b;for(var i=0;i<31;i++){c+=i%8;}return c;}
function fn740510(a,b){var c=a*68+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn007466(a,b){var c=a*36+b;for(var i=0;i<5;i++){c+=i%11;}return c;}
function fn068322(a,b){var c=a*58+b;for(var i=0;i<31;i++){c+=i%11;}return c;}
function fn843656(a,b){var c=a*33+b;for(var i=0;i<13;i++){c+=i%3;}return c;}
function fn988691(a,b){var c=a*15+b;for(var i=0;i<24;i++){c+=i%8;}return c;}
function fn081869(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%12;}return c;}
function fn192987(a,b){var c=a*9+b;for(var i=0;i<34;i++){c+=i%6;}return c;}
function fn439804(a,b){var c=a*84+b;for(var i=0;i<18;i++){c+=i%5;}return c;}
function fn915695(a,b){var c=a*85+b;for(var i=0;i<14;i++){c+=i%3;}return c;}
function fn392124(a,b){var c=a*24+b;for(var i=0;i<28;i++){c+=i%13;}return c;}
function fn940155(a,b){var c=a*30+b;for(var i=0;i<7;i++){c+=i%6;}return c;}
function fn419290(a,b){var c=a*84+b;for(var i=0;i<9;i++){c+=i%6;}return c;}
function fn989376(a,b){var c=a*70+b;for(var i=0;i<36;i++){c+=i%9;}return c;}
function fn835949(a,b){var c=a*92+b;for(var i=0;i<9;i++){c+=i%11;}return c;}
function fn867431(a,b){var c=a*24+b;for(var i=0;i<6;i++){c+=i%8;}return c;}
function fn388304(a,b){var c=a*18+b;for(var i=0;i<31;i++){c+=i%9;}return c;}
function fn957891(a,b){var c=a*78+b;for(var i=0;i<34;i++){c+=i%4;}return c;}
function fn957921(a,b){var c=a*90+b;for(var i=0;i<29;i++){c+=i%8;}return c;}
function fn352034(a,b){var c=a*5+b;for(var i=0;i<33;i++){c+=i%8;}return c;}
function fn346513(a,b){var c=a*75+b;for(var i=0;i<16;i++){c+=i%7;}return c;}
function fn658132(a,b){var c=a*94+b;for(var i=0;i<19;i++){c+=i%11;}return c;}
function fn866032(a,b){var c=a*39+b;for(var i=0;i<15;i++){c+=i%4;}return c;}
function fn062451(a,b){var c=a*11+b;for(var i=0;i<29;i++){c+=i%5;}return c;}
function fn094950(a,b){var c=a*59+b;for(var i=0;i<29;i++){c+=i%13;}return c;}
function fn282799(a,b){var c=a*29+b;for(var i=0;i<25;i++){c+=i%7;}return c;}
function fn693303(a,b){var c=a*6+b;for(var i=0;i<13;i++){c+=i%13;}return c;}
function fn524753(a,b){var c=a*71+b;for(var i=0;i<13;i++){c+=i%10;}return c;}
function fn278616(a,b){var c=a*14+b;for(var i=0;i<23;i++){c+=i%7;}return c;}
function fn354295(a,b){var c=a*85+b;for(var i=0;i<6;i++){c+=i