#include "markovl2/reference_tables.hpp"

#include <stdexcept>

namespace markovl2::tables {

namespace {

AlphaFunction shifted(long long offset) {  // alpha + offset
  return AlphaFunction::alpha() + AlphaFunction(Rational(static_cast<long>(offset)));
}

AlphaFunction linear(long long a, long long b) {  // a alpha + b
  return AlphaFunction(Rational(static_cast<long>(a))) * AlphaFunction::alpha() + AlphaFunction(Rational(static_cast<long>(b)));
}

AlphaFunction cubic_numerator() {  // 21 alpha^3 + 299 alpha^2 + 1391 alpha + 2073
  return AlphaFunction(AlphaPoly({Rational(2073), Rational(1391), Rational(299), Rational(21)}));
}

const long long k3_lower_L[] = {
    0, 4, -4, 225, 360, 0, 0, 390, 510, 720, 15, 155, 205, 1185, 360, 15, 270, 495, 900, 0, 0, 36,
    684, 0, 0
};
constexpr int k3_lower_L_cols = 5;
const long long k3_lower_M[] = {
    0, 19, -4, 225, 360, 0, -60, 390, 510, 720, 15, 155, 205, 1185, 360, 15, 270, 495, 900, 0, 0,
    36, 684, 0, 0
};
constexpr int k3_lower_M_cols = 5;
const long long k4_lower_L[] = {
    0, 0, 10200, 72480, 323700, 1413060, 3602340, 4340700, 1890000, 0, 4882, 30891, 359695,
    2625259, 7966210, 13275570, 12707100, 5670000, 0, 0, 229110, 1642830, 6282570, 16699200,
    24837120, 18692100, 5670000, 2100, 46515, 120645, 2404465, 10159765, 20026720, 25810890,
    16625700, 1890000, 2756, 106120, 876330, 2582090, 7616630, 17567550, 18060000, 6300000, 0, 0,
    11060, 662604, 2653840, 6215776, 11121880, 7413000, 0, 0, 0, 0, 0, 1120600, 4777900, 3435000,
    0, 0, 0
};
constexpr int k4_lower_L_cols = 9;
const long long k4_lower_M[] = {
    0, 0, 10200, 72480, 323700, 1413060, 3602340, 4340700, 1890000, 0, 8715, 30891, 359695,
    2625259, 7966210, 13275570, 12707100, 5670000, 0, -15330, 229110, 1642830, 6282570, 16699200,
    24837120, 18692100, 5670000, 2100, 46515, 120645, 2404465, 10159765, 20026720, 25810890,
    16625700, 1890000, 2800, 106120, 876330, 2582090, 7616630, 17567550, 18060000, 6300000, 0, 0,
    15960, 722904, 2653840, 6215776, 11121880, 7413000, 0, 0, -700, -19600, -241200, 1120600,
    4777900, 3435000, 0, 0, 0
};
constexpr int k4_lower_M_cols = 9;
const long long k5_lower_L[] = {
    0, 0, 0, 64925, 1064665, 8138830, 43256150, 172898565, 474925185, 805850640, 734423760,
    266716800, 0, 0, 91665, 1204470, 9699090, 71280390, 373661895, 1241223900, 2610599670,
    3473555400, 2804336640, 1066867200, 0, 19824, 130578, 3408188, 48487642, 313463920, 1271550350,
    3522779568, 6544523790, 7686433440, 5117787360, 1600300800, 0, 0, 1451982, 16288020, 114900450,
    672910770, 2546690160, 6152610870, 9859721760, 10218685680, 5871579840, 1066867200, 3675,
    128835, 0, 24490445, 226233910, 991504675, 3153540110, 7169071245, 10438959825, 9013742640,
    3935025360, 266716800, 6027, 381850, 6416795, 22404550, 169885205, 1005110890, 2985302145,
    5744010510, 7716554370, 5584488840, 1111320000, 0, 0, 52297, 5062484, 58263912, 213196158,
    589342950, 1804792500, 3787471002, 4038237000, 1770703200, 0, 0, 0, 0, 0, 15084950, 144208510,
    409403975, 1057769610, 1931913900, 1309770000, 0, 0, 0, 0, 0, 0, 0, 0, 256255650, 690284700,
    417538800, 0, 0, 0, 0
};
constexpr int k5_lower_L_cols = 12;
const long long k5_lower_M[] = {
    0, 0, 0, 64925, 1064665, 8138830, 43256150, 172898565, 474925185, 805850640, 734423760,
    266716800, 0, 0, 91665, 1204470, 9699090, 71280390, 373661895, 1241223900, 2610599670,
    3473555400, 2804336640, 1066867200, 0, 27804, 130578, 3408188, 48487642, 313463920, 1271550350,
    3522779568, 6544523790, 7686433440, 5117787360, 1600300800, 0, -39900, 1500030, 16288020,
    114900450, 672910770, 2546690160, 6152610870, 9859721760, 10218685680, 5871579840, 1066867200,
    3675, 128835, -240240, 24490445, 226233910, 991504675, 3153540110, 7169071245, 10438959825,
    9013742640, 3935025360, 266716800, 6125, 381850, 6416795, 22404550, 169885205, 1005110890,
    2985302145, 5744010510, 7716554370, 5584488840, 1111320000, 0, 0, 77616, 5699022, 58263912,
    213196158, 589342950, 1804792500, 3787471002, 4038237000, 1770703200, 0, 0, -2450, -123445,
    -3055430, 20292530, 152590030, 409403975, 1057769610, 1931913900, 1309770000, 0, 0, 0, 0,
    -15750, -636300, -26037900, -41907600, 256255650, 690284700, 417538800, 0, 0, 0, 0
};
constexpr int k5_lower_M_cols = 12;
const long long k6_lower_L[] = {
    0, 0, 0, 0, 3128160, 116263280, 1988081620, 21102099620, 157521933940, 879576036500,
    3768921407020, 12408373123020, 30888195414300, 56418683248620, 72303376012560, 60744201708960,
    29689237670400, 6337191168000, 0, 0, 0, 6055665, 204553195, 3318028175, 35746404925,
    290306961329, 1842856573327, 9097329993521, 34425402760287, 98585568531450, 211221314490186,
    333956069661060, 380597496158880, 297669661581600, 143165195712000, 31685955840000, 0, 0,
    3476550, 95465370, 1480047030, 18873326010, 197029544250, 1558206940290, 9151953918030,
    40326294432270, 134937782918400, 344523626901300, 667161153364860, 961433219937960,
    996948009953280, 704885552078400, 307454361984000, 63371911680000, 0, 425810, 6110115,
    190273710, 5336244870, 77596724865, 726747795015, 4960832042100, 25828662738780,
    103410904320900, 317406347163180, 742720332283380, 1314049020225480, 1730658737031840,
    1640782277386560, 1045548136987200, 391950244224000, 63371911680000, 0, 0, 48434732,
    1221447150, 15771654360, 174458095350, 1551387171180, 10157416978170, 49078270584420,
    179681190528840, 506548245985320, 1098864688687920, 1805851509808500, 2184547015159740,
    1861980233153040, 1036553459911200, 317437952832000, 31685955840000, 48510, 2817045, 0,
    1171139970, 32618391960, 356484794820, 2562636437130, 14397653320512, 64463871381756,
    223720508502183, 592781349468231, 1195101212250330, 1815258345062778, 2011470759046980,
    1520944502505120, 695810390758560, 151152068390400, 6337191168000, 95223, 9741270, 336258384,
    2726237052, 21628131756, 298526146072, 2754345379016, 15830016304564, 64790433176084,
    206003553429058, 516092578758680, 988299659161584, 1389893720693940, 1371614133582000,
    876545356468320, 300533746867200, 31685955840000, 0, 0, 1348462, 218861747, 7298343195,
    73442566505, 392659895320, 1907270574440, 10335346465675, 46215397662665, 148200002432020,
    349390783269990, 622626376181040, 808485195464100, 691021013177880, 330199345808640,
    63688771238400, 0, 0, 0, 0, 0, 0, 29020437724, 419332019003, 2403530867430, 8454107203080,
    25413887653770, 74515561079190, 182484813042840, 315159824447160, 350770360746960,
    227021138467200, 64746646272000, 0, 0, 0, 0, 0, 0, 0, 0, 0, 384166681454, 3721378398370,
    13866272170542, 38329760467746, 86130722275092, 127817022168000, 103510976206176,
    33927611477760, 0, 0, 0, 0, 16170, 1252020, 38848656, 1158647028, 0, 0, 0, 0, 3624993260826,
    21352330210512, 36302262824520, 27594339093216, 7959911420160, 0, 0, 0, 0, 0
};
constexpr int k6_lower_L_cols = 18;
const long long k6_lower_M[] = {
    0, 0, 0, 0, 3128160, 116263280, 1988081620, 21102099620, 157521933940, 879576036500,
    3768921407020, 12408373123020, 30888195414300, 56418683248620, 72303376012560, 60744201708960,
    29689237670400, 6337191168000, 0, 0, 0, 6055665, 204553195, 3318028175, 35746404925,
    290306961329, 1842856573327, 9097329993521, 34425402760287, 98585568531450, 211221314490186,
    333956069661060, 380597496158880, 297669661581600, 143165195712000, 31685955840000, 0, 0,
    3476550, 95465370, 1480047030, 18873326010, 197029544250, 1558206940290, 9151953918030,
    40326294432270, 134937782918400, 344523626901300, 667161153364860, 961433219937960,
    996948009953280, 704885552078400, 307454361984000, 63371911680000, 0, 544005, 6110115,
    190273710, 5336244870, 77596724865, 726747795015, 4960832042100, 25828662738780,
    103410904320900, 317406347163180, 742720332283380, 1314049020225480, 1730658737031840,
    1640782277386560, 1045548136987200, 391950244224000, 63371911680000, 0, -709170, 51415980,
    1221447150, 15771654360, 174458095350, 1551387171180, 10157416978170, 49078270584420,
    179681190528840, 506548245985320, 1098864688687920, 1805851509808500, 2184547015159740,
    1861980233153040, 1036553459911200, 317437952832000, 31685955840000, 48510, 2817045, -17887485,
    1171139970, 32618391960, 356484794820, 2562636437130, 14397653320512, 64463871381756,
    223720508502183, 592781349468231, 1195101212250330, 1815258345062778, 2011470759046980,
    1520944502505120, 695810390758560, 151152068390400, 6337191168000, 97020, 9741270, 336258384,
    2726237052, 21628131756, 298526146072, 2754345379016, 15830016304564, 64790433176084,
    206003553429058, 516092578758680, 988299659161584, 1389893720693940, 1371614133582000,
    876545356468320, 300533746867200, 31685955840000, 0, 0, 2279970, 259149660, 7522825695,
    73442566505, 392659895320, 1907270574440, 10335346465675, 46215397662665, 148200002432020,
    349390783269990, 622626376181040, 808485195464100, 691021013177880, 330199345808640,
    63688771238400, 0, 0, -64680, -5453910, -233284590, -627553080, 36182631870, 439184120760,
    2403530867430, 8454107203080, 25413887653770, 74515561079190, 182484813042840, 315159824447160,
    350770360746960, 227021138467200, 64746646272000, 0, 0, 0, 0, -810810, -50657310, -4316051520,
    -42053593230, -87653879280, 568697131530, 4052140160904, 13866272170542, 38329760467746,
    86130722275092, 127817022168000, 103510976206176, 33927611477760, 0, 0, 0, 0, 16170, 1252020,
    38848656, 1158647028, -5517429876, -188752387572, -1107182700456, -1984570575204,
    3624993260826, 21352330210512, 36302262824520, 27594339093216, 7959911420160, 0, 0, 0, 0, 0
};
constexpr int k6_lower_M_cols = 18;
const long long k3_upper_L[] = {
    0, 0, 0, 1500, 3300, 0, 115, 1885, 4170, 4233, 32, 598, 3026, 6360, 0, 96, 979, 2143, 850, 0,
    96, 624, 1098, 0, 0
};
constexpr int k3_upper_L_cols = 5;
const long long k3_upper_M[] = {
    0, 0, 0, 1500, 3300, 0, 115, 1885, 4170, 4650, 32, 598, 3026, 6360, -600, 96, 979, 2143, 1560,
    -1950, 96, 624, 1098, -2130, 0
};
constexpr int k3_upper_M_cols = 5;
const long long k4_upper_L[] = {
    0, 0, 0, 0, 905520, 8808240, 29717520, 41571600, 19756800, 0, 0, 54390, 2038890, 16676660,
    60285680, 115770830, 117031110, 48774600, 0, 42294, 1237572, 10966494, 52723608, 141477042,
    198565500, 127823850, 24194362, 6075, 266115, 3694950, 25364010, 85166735, 157047575,
    154257320, 46893642, 0, 24300, 617510, 5700800, 26734470, 72437020, 97039330, 34815501, 0, 0,
    36450, 678780, 4979940, 16392810, 28823750, 17907835, 0, 0, 0, 24300, 360421, 2131108, 6792156,
    5246162, 0, 0, 0, 0
};
constexpr int k4_upper_L_cols = 9;
const long long k4_upper_M[] = {
    0, 0, 0, 0, 905520, 8808240, 29717520, 41571600, 19756800, 0, 0, 54390, 2038890, 16676660,
    60285680, 115770830, 117031110, 48774600, 0, 42294, 1237572, 10966494, 52723608, 141477042,
    198565500, 127823850, 27783000, 6075, 266115, 3694950, 25364010, 85166735, 157047575,
    154257320, 52558380, -11730600, 24300, 617510, 5700800, 26734470, 72437020, 97039330, 38636640,
    -18088350, -10495800, 36450, 678780, 4979940, 16392810, 28823750, 20280800, -12849340,
    -18282390, 0, 24300, 360421, 2131108, 6792156, 5246162, -9491857, -9740850, 0, 0
};
constexpr int k4_upper_M_cols = 9;
const long long k5_upper_L[] = {
    0, 0, 0, 0, 0, 85424220, 1436596560, 8988832440, 26097558480, 34662943980, 16203045600, 0, 0,
    0, 4261005, 260814330, 3617057430, 22250151630, 73071107235, 134891273160, 134642808090,
    56710659600, 0, 0, 5436720, 241567920, 3235204800, 22246774740, 91003127400, 223063050420,
    312360753600, 222393230640, 64812182400, 0, 1982358, 88937982, 1392482448, 12340605438,
    63755213760, 194677526736, 357163148790, 375802372260, 186521488020, 12638375568, 200704,
    14563010, 340432890, 4020858058, 25446365294, 99455228208, 241336266948, 338611016520,
    235926284580, 44541786567, 0, 1003520, 42390775, 693405300, 6004806185, 31876009900,
    96870254355, 175080003840, 176585507595, 54286938720, 0, 0, 2007040, 63580160, 829630410,
    5638883530, 22495811450, 57112266330, 77686343280, 30853075478, 0, 0, 0, 2007040, 52428341,
    568553244, 3375204826, 9950248616, 17535199185, 13032227178, 0, 0, 0, 0, 1003520, 22758400,
    207566490, 998218460, 3486984100, 3092469120, 0, 0, 0, 0, 0
};
constexpr int k5_upper_L_cols = 11;
const long long k5_upper_M[] = {
    0, 0, 0, 0, 0, 85424220, 1436596560, 8988832440, 26097558480, 34662943980, 16203045600, 0, 0,
    0, 4261005, 260814330, 3617057430, 22250151630, 73071107235, 134891273160, 134642808090,
    56710659600, 0, 0, 5436720, 241567920, 3235204800, 22246774740, 91003127400, 223063050420,
    312360753600, 222393230640, 64812182400, 0, 1982358, 88937982, 1392482448, 12340605438,
    63755213760, 194677526736, 357163148790, 375802372260, 186521488020, 16203045600, 200704,
    14563010, 340432890, 4020858058, 25446365294, 99455228208, 241336266948, 338611016520,
    235926284580, 51689001420, -16203045600, 1003520, 42390775, 693405300, 6004806185, 31876009900,
    96870254355, 175080003840, 176585507595, 59214803760, -31849915230, -8101522800, 2007040,
    63580160, 829630410, 5638883530, 22495811450, 57112266330, 77686343280, 32878980540,
    -21278795580, -19430795160, 0, 2007040, 52428341, 568553244, 3375204826, 9950248616,
    17535199185, 14090589072, -8987585040, -16802648100, 0, 0, 1003520, 22758400, 207566490,
    998218460, 3486984100, 3092469120, -5291809470, -5709701340, 0, 0, 0
};
constexpr int k5_upper_M_cols = 11;
const long long k6_upper_L[] = {
    0, 0, 0, 0, 0, 0, 156657528720, 5737886375760, 90962828787600, 821967442647120,
    4683403445822640, 17541804701337840, 43597315400007600, 70706025735594480, 71282695085965440,
    40151827863100800, 9572830210944000, 0, 0, 0, 0, 6757992780, 678222070680, 19589397975840,
    285634042298220, 2522414547688728, 14663875740671388, 58501440227708016, 163077338127380292,
    317712831386568156, 424476237961133820, 370662526010533680, 190176873072832800,
    43261828837920000, 0, 0, 0, 11987252200, 889711262440, 23583750724380, 339201489248160,
    3098176511479280, 19367097472935520, 85966291726204120, 275002627721514000, 633513827175290600,
    1035759237211329400, 1166286653916203820, 857715825988763280, 371893024262944800,
    72716691025440000, 0, 0, 7214978925, 496609292025, 13291579355670, 204179315141340,
    2064129233162535, 14556440238205635, 73609280525046420, 270402692712289830, 724008553578199890,
    1404602858405626110, 1939380788446101000, 1837004374966081860, 1112754260403129960,
    374764348674777600, 49617294906564000, 0, 1712831340, 129414811020, 3975634217280,
    71880656791680, 848078318563740, 6887056367079900, 39911599747186200, 168732748048142520,
    525000679384868280, 1198318687198670400, 1976258187012861840, 2286621788179676640,
    1763385304898752920, 820925242403999040, 176396296906922400, 0, 137812500, 16225847190,
    682431963570, 15545520413640, 218617776740580, 2083353346583670, 14142830057025810,
    69897865311080520, 253532902195144824, 675267348901207524, 1310711831601226488,
    1815905828323340796, 1716811248944619828, 1006399215292377060, 277604251541734810, 0, 0,
    826875000, 61013597190, 1909641192060, 34393961720958, 407202449242428, 3322865459747106,
    19301411805553332, 81762211401327198, 255297208204811052, 584508472246139364,
    960008914211603088, 1083067213944785244, 768783125513892720, 256729802815313776, 0, 0, 0,
    2067187500, 121629375000, 3176038395495, 48625624140345, 488239798537050, 3448886831378940,
    17606432763060855, 65213552886377595, 174944618786085540, 337073370501014070,
    452338940602722600, 386368902093765990, 147265658296879789, 0, 0, 0, 0, 2756250000,
    141073384270, 3233829060980, 44026671755710, 391807489052700, 2400975627767010,
    10537484120843400, 33832857309375390, 78706656458079300, 126378098307624240,
    125459625652811660, 50117292233704841, 0, 0, 0, 0, 0, 2067187500, 96161625000, 1990746645930,
    24295459922370, 198688598846220, 1108865878357650, 4243406630751540, 11331273200216130,
    21128915605090608, 25176310282435158, 10624247696162964, 0, 0, 0, 0, 0, 0, 826875000,
    35900159390, 685515044860, 7604368197232, 53934381373052, 280425349855044, 1099649486098068,
    2850997375559272, 3776309107237628, 100310771384846, 0, 0, 0, 0, 0, 0, 0
};
constexpr int k6_upper_L_cols = 17;
const long long k6_upper_M[] = {
    0, 0, 0, 0, 0, 0, 156657528720, 5737886375760, 90962828787600, 821967442647120,
    4683403445822640, 17541804701337840, 43597315400007600, 70706025735594480, 71282695085965440,
    40151827863100800, 9572830210944000, 0, 0, 0, 0, 6757992780, 678222070680, 19589397975840,
    285634042298220, 2522414547688728, 14663875740671388, 58501440227708016, 163077338127380292,
    317712831386568156, 424476237961133820, 370662526010533680, 190176873072832800,
    43261828837920000, 0, 0, 0, 11987252200, 889711262440, 23583750724380, 339201489248160,
    3098176511479280, 19367097472935520, 85966291726204120, 275002627721514000, 633513827175290600,
    1035759237211329400, 1166286653916203820, 857715825988763280, 371893024262944800,
    72716691025440000, 0, 0, 7214978925, 496609292025, 13291579355670, 204179315141340,
    2064129233162535, 14556440238205635, 73609280525046420, 270402692712289830, 724008553578199890,
    1404602858405626110, 1939380788446101000, 1837004374966081860, 1112754260403129960,
    374764348674777600, 49705079941440000, 0, 1712831340, 129414811020, 3975634217280,
    71880656791680, 848078318563740, 6887056367079900, 39911599747186200, 168732748048142520,
    525000679384868280, 1198318687198670400, 1976258187012861840, 2286621788179676640,
    1763385304898752920, 820925242403999040, 178350638317790400, 1840928886720000, 137812500,
    16225847190, 682431963570, 15545520413640, 218617776740580, 2083353346583670,
    14142830057025810, 69897865311080520, 253532902195144824, 675267348901207524,
    1310711831601226488, 1815905828323340796, 1716811248944619828, 1006399215292377060,
    283521195216151200, -4068645433221600, -13438780873056000, 826875000, 61013597190,
    1909641192060, 34393961720958, 407202449242428, 3322865459747106, 19301411805553332,
    81762211401327198, 255297208204811052, 584508472246139364, 960008914211603088,
    1083067213944785244, 768783125513892720, 264555646816493340, -25185070761515280,
    -43598489040136800, -4602322216800000, 2067187500, 121629375000, 3176038395495, 48625624140345,
    488239798537050, 3448886831378940, 17606432763060855, 65213552886377595, 174944618786085540,
    337073370501014070, 452338940602722600, 386368902093765990, 152704407947442120,
    -39077291676501540, -59085225024570360, -14075574910689600, 0, 2756250000, 141073384270,
    3233829060980, 44026671755710, 391807489052700, 2400975627767010, 10537484120843400,
    33832857309375390, 78706656458079300, 126378098307624240, 125459625652811660,
    52601940894289780, -28750678275282040, -45675842674954800, -16885936111968000, 0, 0,
    2067187500, 96161625000, 1990746645930, 24295459922370, 198688598846220, 1108865878357650,
    4243406630751540, 11331273200216130, 21128915605090608, 25176310282435158, 11652636597863226,
    -13776737928943668, -22906285043773824, -9544747851001440, 0, 0, 0, 826875000, 35900159390,
    685515044860, 7604368197232, 53934381373052, 280425349855044, 1099649486098068,
    2850997375559272, 3776309107237628, 100310771384846, -6170333410201568, -6786924207395784,
    -2307796348667040, 0, 0, 0, 0
};
constexpr int k6_upper_M_cols = 17;

CoeffMatrix make_matrix(int k, const long long* data, int cols) {
  CoeffMatrix m;
  m.k = k;
  m.d = cols - 1;
  m.rows.assign(static_cast<size_t>(2 * k - 1), std::vector<Int>(static_cast<size_t>(cols)));
  for (int i = 0; i < 2 * k - 1; ++i)
    for (int j = 0; j < cols; ++j) m.rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = Int(static_cast<long>(data[i * cols + j]));
  return m;
}

std::vector<MatrixFixture> make_fixtures() {
  std::vector<MatrixFixture> v;
  v.push_back({3, Side::lower, 4, make_matrix(3, k3_lower_M, k3_lower_M_cols), make_matrix(3, k3_lower_L, k3_lower_L_cols)});
  v.push_back({4, Side::lower, 4, make_matrix(4, k4_lower_M, k4_lower_M_cols), make_matrix(4, k4_lower_L, k4_lower_L_cols)});
  v.push_back({5, Side::lower, 5, make_matrix(5, k5_lower_M, k5_lower_M_cols), make_matrix(5, k5_lower_L, k5_lower_L_cols)});
  v.push_back({6, Side::lower, 6, make_matrix(6, k6_lower_M, k6_lower_M_cols), make_matrix(6, k6_lower_L, k6_lower_L_cols)});
  v.push_back({3, Side::upper, 3, make_matrix(3, k3_upper_M, k3_upper_M_cols), make_matrix(3, k3_upper_L, k3_upper_L_cols)});
  v.push_back({4, Side::upper, 4, make_matrix(4, k4_upper_M, k4_upper_M_cols), make_matrix(4, k4_upper_L, k4_upper_L_cols)});
  v.push_back({5, Side::upper, 5, make_matrix(5, k5_upper_M, k5_upper_M_cols), make_matrix(5, k5_upper_L, k5_upper_L_cols)});
  v.push_back({6, Side::upper, 6, make_matrix(6, k6_upper_M, k6_upper_M_cols), make_matrix(6, k6_upper_L, k6_upper_L_cols)});
  return v;
}

std::vector<ClosedForm> make_lower() {
  std::vector<ClosedForm> v;
  v.push_back({3, AlphaFunction(Rational(2)) / (shifted(1) * shifted(5)), Rational(3, 8)});
  v.push_back({4, linear(5, 17) / (AlphaFunction(Rational(2)) * shifted(1) * shifted(3) * shifted(7)),
               Rational(8, 25)});
  v.push_back({5, AlphaFunction(Rational(2)) * linear(7, 31) / (shifted(1) * shifted(9) * linear(5, 17)),
               Rational(25, 84)});
  v.push_back({6, cubic_numerator() / (shifted(1) * shifted(3) * shifted(5) * shifted(11) * linear(7, 31)),
               Rational(2, 7)});
  return v;
}

std::vector<ClosedForm> make_upper() {
  std::vector<ClosedForm> v;
  v.push_back({3, AlphaFunction(Rational(1)) / (af_pow(shifted(1), 3) * shifted(3) * shifted(5)), Rational(2, 5)});
  v.push_back({4, linear(5, 17) / (AlphaFunction(Rational(2)) * af_pow(shifted(1), 4) * af_pow(shifted(3), 2) *
                                   shifted(5) * shifted(7)),
               Rational(3, 7)});
  v.push_back({5, linear(7, 31) / (af_pow(shifted(1), 5) * af_pow(shifted(3), 2) * shifted(5) * shifted(7) *
                                   shifted(9)),
               Rational(4, 9)});
  v.push_back({6, cubic_numerator() / (af_pow(shifted(1), 6) * af_pow(shifted(3), 3) * af_pow(shifted(5), 2) *
                                       shifted(7) * shifted(9) * shifted(11)),
               Rational(5, 11)});
  return v;
}

}  // namespace

const ClosedForm& lower_constant(int k) {
  static const std::vector<ClosedForm> v = make_lower();
  if (k < 3 || k > 6) throw std::domain_error("closed-form constants cover k = 3..6");
  return v[static_cast<size_t>(k) - 3];
}

const ClosedForm& upper_constant(int k) {
  static const std::vector<ClosedForm> v = make_upper();
  if (k < 3 || k > 6) throw std::domain_error("closed-form constants cover k = 3..6");
  return v[static_cast<size_t>(k) - 3];
}

const MatrixFixture& matrix_fixture(int k, Side side) {
  static const std::vector<MatrixFixture> v = make_fixtures();
  if (k < 3 || k > 6) throw std::domain_error("matrix fixtures cover k = 3..6");
  return v[static_cast<size_t>(k) - 3 + (side == Side::upper ? 4 : 0)];
}

const std::vector<AsymptoticRow>& asymptotic_table() {
  static const std::vector<AsymptoticRow> v = {
      {3, Rational(2, 5), Rational(1, 15), "0.63245553", "0.63677321", "1.006584242", "1.00024103"},
      {4, Rational(17, 42), Rational(17, 630), "0.63620901", "0.63663212", "1.00064564", "1.00001939"},
      {5, Rational(62, 153), Rational(31, 2835), "0.63657580", "0.63662085", "1.00006906", "1.00000170"},
      {6, Rational(2073, 5115), Rational(2073, 467775), "0.63661494", "0.63661987", "1.00000757", "1.00000015"},
  };
  return v;
}

}  // namespace markovl2::tables
