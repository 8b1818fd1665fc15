// Generated by tools/gen_filters.py. Do not edit by hand.
#include "mwde/filter_data.hpp"

namespace mwde::detail {
namespace {

constexpr double haar_lo[] = {
    0.7071067811865476, 0.7071067811865476,
};
constexpr double haar_hi[] = {
    0.7071067811865476, -0.7071067811865476,
};

constexpr double db2_lo[] = {
    0.48296291314453416, 0.8365163037378079, 0.2241438680420134,
    -0.12940952255126037,
};
constexpr double db2_hi[] = {
    -0.12940952255126037, -0.2241438680420134, 0.8365163037378079,
    -0.48296291314453416,
};

constexpr double db3_lo[] = {
    0.33267055295008263, 0.8068915093110925, 0.45987750211849154,
    -0.13501102001025458, -0.08544127388202666, 0.03522629188570953,
};
constexpr double db3_hi[] = {
    0.03522629188570953, 0.08544127388202666, -0.13501102001025458,
    -0.45987750211849154, 0.8068915093110925, -0.33267055295008263,
};

constexpr double db4_lo[] = {
    0.2303778133088965, 0.7148465705529157, 0.6308807679298589,
    -0.027983769416859854, -0.18703481171909309, 0.030841381835560764,
    0.0328830116668852, -0.010597401785069032,
};
constexpr double db4_hi[] = {
    -0.010597401785069032, -0.0328830116668852, 0.030841381835560764,
    0.18703481171909309, -0.027983769416859854, -0.6308807679298589,
    0.7148465705529157, -0.2303778133088965,
};

constexpr double db5_lo[] = {
    0.16010239797419293, 0.6038292697971896, 0.7243085284377729,
    0.13842814590132074, -0.24229488706638203, -0.032244869584638375,
    0.07757149384004572, -0.006241490212798274, -0.012580751999081999,
    0.0033357252854737712,
};
constexpr double db5_hi[] = {
    0.0033357252854737712, 0.012580751999081999, -0.006241490212798274,
    -0.07757149384004572, -0.032244869584638375, 0.24229488706638203,
    0.13842814590132074, -0.7243085284377729, 0.6038292697971896,
    -0.16010239797419293,
};

constexpr double db6_lo[] = {
    0.11154074335010947, 0.49462389039845306, 0.7511339080210954,
    0.31525035170919763, -0.22626469396543983, -0.12976686756726194,
    0.09750160558732304, 0.027522865530305727, -0.03158203931748603,
    0.0005538422011614961, 0.004777257510945511, -0.0010773010853084796,
};
constexpr double db6_hi[] = {
    -0.0010773010853084796, -0.004777257510945511, 0.0005538422011614961,
    0.03158203931748603, 0.027522865530305727, -0.09750160558732304,
    -0.12976686756726194, 0.22626469396543983, 0.31525035170919763,
    -0.7511339080210954, 0.49462389039845306, -0.11154074335010947,
};

constexpr double db7_lo[] = {
    0.07785205408500918, 0.3965393194819173, 0.7291320908462351,
    0.4697822874051931, -0.14390600392856498, -0.22403618499387498,
    0.07130921926683026, 0.08061260915108308, -0.03802993693501441,
    -0.01657454163066688, 0.01255099855609984, 0.0004295779729213665,
    -0.0018016407040474908, 0.00035371379997452024,
};
constexpr double db7_hi[] = {
    0.00035371379997452024, 0.0018016407040474908, 0.0004295779729213665,
    -0.01255099855609984, -0.01657454163066688, 0.03802993693501441,
    0.08061260915108308, -0.07130921926683026, -0.22403618499387498,
    0.14390600392856498, 0.4697822874051931, -0.7291320908462351,
    0.3965393194819173, -0.07785205408500918,
};

constexpr double db8_lo[] = {
    0.05441584224310401, 0.31287159091429995, 0.6756307362972898,
    0.5853546836542067, -0.015829105256349306, -0.2840155429615469,
    0.0004724845739132828, 0.12874742662047847, -0.017369301001807547,
    -0.044088253930794755, 0.013981027917398282, 0.008746094047405777,
    -0.004870352993451574, -0.00039174037337694705, 0.0006754494064505693,
    -0.00011747678412476953,
};
constexpr double db8_hi[] = {
    -0.00011747678412476953, -0.0006754494064505693, -0.00039174037337694705,
    0.004870352993451574, 0.008746094047405777, -0.013981027917398282,
    -0.044088253930794755, 0.017369301001807547, 0.12874742662047847,
    -0.0004724845739132828, -0.2840155429615469, 0.015829105256349306,
    0.5853546836542067, -0.6756307362972898, 0.31287159091429995,
    -0.05441584224310401,
};

constexpr double db9_lo[] = {
    0.038077947363878345, 0.24383467461259034, 0.6048231236901112,
    0.6572880780513005, 0.13319738582500756, -0.2932737832791749,
    -0.09684078322297646, 0.14854074933810638, 0.03072568147933338,
    -0.06763282906132997, 0.00025094711483145197, 0.022361662123679096,
    -0.004723204757751397, -0.00428150368246343, 0.0018476468830562265,
    0.00023038576352319597, -0.0002519631889427101, 3.93473203162716e-05,
};
constexpr double db9_hi[] = {
    3.93473203162716e-05, 0.0002519631889427101, 0.00023038576352319597,
    -0.0018476468830562265, -0.00428150368246343, 0.004723204757751397,
    0.022361662123679096, -0.00025094711483145197, -0.06763282906132997,
    -0.03072568147933338, 0.14854074933810638, 0.09684078322297646,
    -0.2932737832791749, -0.13319738582500756, 0.6572880780513005,
    -0.6048231236901112, 0.24383467461259034, -0.038077947363878345,
};

constexpr double db10_lo[] = {
    0.026670057900555554, 0.1881768000776915, 0.5272011889317256,
    0.6884590394536035, 0.2811723436605775, -0.24984642432731538,
    -0.19594627437737705, 0.12736934033579325, 0.09305736460357235,
    -0.07139414716639708, -0.029457536821875813, 0.033212674059341,
    0.0036065535669561697, -0.010733175483330575, 0.001395351747052901,
    0.001992405295185056, -0.0006858566949597116, -0.00011646685512928545,
    9.358867032006959e-05, -1.3264202894521244e-05,
};
constexpr double db10_hi[] = {
    -1.3264202894521244e-05, -9.358867032006959e-05, -0.00011646685512928545,
    0.0006858566949597116, 0.001992405295185056, -0.001395351747052901,
    -0.010733175483330575, -0.0036065535669561697, 0.033212674059341,
    0.029457536821875813, -0.07139414716639708, -0.09305736460357235,
    0.12736934033579325, 0.19594627437737705, -0.24984642432731538,
    -0.2811723436605775, 0.6884590394536035, -0.5272011889317256,
    0.1881768000776915, -0.026670057900555554,
};

constexpr double sym4_lo[] = {
    0.032223100604051466, -0.012603967262031304, -0.09921954357663353,
    0.29785779560530606, 0.8037387518051321, 0.497618667632775,
    -0.029635527646002493, -0.07576571478950221,
};
constexpr double sym4_hi[] = {
    -0.07576571478950221, 0.029635527646002493, 0.497618667632775,
    -0.8037387518051321, 0.29785779560530606, 0.09921954357663353,
    -0.012603967262031304, -0.032223100604051466,
};

constexpr double sym5_lo[] = {
    0.019538882735249827, -0.021101834024689042, -0.17532808990805623,
    0.01660210576451085, 0.633978963456792, 0.7234076904040407,
    0.19939753397685558, -0.039134249302313844, 0.02951949092570626,
    0.027333068344998768,
};
constexpr double sym5_hi[] = {
    0.027333068344998768, -0.02951949092570626, -0.039134249302313844,
    -0.19939753397685558, 0.7234076904040407, -0.633978963456792,
    0.01660210576451085, 0.17532808990805623, -0.021101834024689042,
    -0.019538882735249827,
};

constexpr double sym6_lo[] = {
    -0.00780070832503238, 0.0017677118642540077, 0.04472490177078139,
    -0.02106029251237085, -0.07263752278637658, 0.3379294217281658,
    0.787641141028651, 0.49105594192797375, -0.04831174258569806,
    -0.11799011114852002, 0.0034907120842221626, 0.015404109327044824,
};
constexpr double sym6_hi[] = {
    0.015404109327044824, -0.0034907120842221626, -0.11799011114852002,
    0.04831174258569806, 0.49105594192797375, -0.787641141028651,
    0.3379294217281658, 0.07263752278637658, -0.02106029251237085,
    -0.04472490177078139, 0.0017677118642540077, 0.00780070832503238,
};

constexpr double sym7_lo[] = {
    0.002681814568260147, -0.001047384888679738, -0.012636303403240567,
    0.030515513165877885, 0.06789269350122057, -0.04955283493704283,
    0.017441255086835708, 0.5361019170905692, 0.7677643170048829,
    0.2886296317506479, -0.14004724044293365, -0.10780823770328972,
    0.0040102448715223955, 0.010268176708464817,
};
constexpr double sym7_hi[] = {
    0.010268176708464817, -0.0040102448715223955, -0.10780823770328972,
    0.14004724044293365, 0.2886296317506479, -0.7677643170048829,
    0.5361019170905692, -0.017441255086835708, -0.04955283493704283,
    -0.06789269350122057, 0.030515513165877885, 0.012636303403240567,
    -0.001047384888679738, -0.002681814568260147,
};

constexpr double sym8_lo[] = {
    0.001889950332767689, -0.0003029205147241331, -0.014952258337062199,
    0.0038087520138944896, 0.04913717967373029, -0.027219029917103486,
    -0.0519458381078818, 0.36444189483617895, 0.777185751699628,
    0.4813596512590534, -0.061273359067811076, -0.14329423835127267,
    0.007607487324976609, 0.03169508781152599, -0.0005421323318000107,
    -0.0033824159510050028,
};
constexpr double sym8_hi[] = {
    -0.0033824159510050028, 0.0005421323318000107, 0.03169508781152599,
    -0.007607487324976609, -0.14329423835127267, 0.061273359067811076,
    0.4813596512590534, -0.777185751699628, 0.36444189483617895,
    0.0519458381078818, -0.027219029917103486, -0.04913717967373029,
    0.0038087520138944896, 0.014952258337062199, -0.0003029205147241331,
    -0.001889950332767689,
};

constexpr double sym9_lo[] = {
    0.001069490032908612, -0.00047315449868004354, -0.010264064027633121,
    0.008859267493400267, 0.062077789302885746, -0.018233770779395506,
    -0.19155083129728434, 0.03527248803527104, 0.6173384491409342,
    0.7178970827644124, 0.23876091460730517, -0.05456895843083335,
    0.0005834627461249819, 0.030224878858275187, -0.011528210207679187,
    -0.013271967781817134, 0.0006197808889855071, 0.0014009155259146562,
};
constexpr double sym9_hi[] = {
    0.0014009155259146562, -0.0006197808889855071, -0.013271967781817134,
    0.011528210207679187, 0.030224878858275187, -0.0005834627461249819,
    -0.05456895843083335, -0.23876091460730517, 0.7178970827644124,
    -0.6173384491409342, 0.03527248803527104, 0.19155083129728434,
    -0.018233770779395506, -0.062077789302885746, 0.008859267493400267,
    0.010264064027633121, -0.00047315449868004354, -0.001069490032908612,
};

constexpr double sym10_lo[] = {
    -0.00045932942100465206, 5.703608361849501e-05, 0.004593173585311792,
    -0.0008043589320164513, -0.02035493981231111, 0.00576491203358115,
    0.049994972077375154, -0.03199005688242811, -0.035536740473819585,
    0.3838267610670763, 0.7695100370210979, 0.4716906669384429,
    -0.07088053578323157, -0.1594942788849106, 0.011609893903711319,
    0.04592723923109151, -0.0014653825813046104, -0.00864129927702215,
    9.563267072285273e-05, 0.0007701598091144599,
};
constexpr double sym10_hi[] = {
    0.0007701598091144599, -9.563267072285273e-05, -0.00864129927702215,
    0.0014653825813046104, 0.04592723923109151, -0.011609893903711319,
    -0.1594942788849106, 0.07088053578323157, 0.4716906669384429,
    -0.7695100370210979, 0.3838267610670763, 0.035536740473819585,
    -0.03199005688242811, -0.049994972077375154, 0.00576491203358115,
    0.02035493981231111, -0.0008043589320164513, -0.004593173585311792,
    5.703608361849501e-05, 0.00045932942100465206,
};

constexpr double coif1_lo[] = {
    -0.07273261951252645, 0.33789766245748176, 0.8525720202116004,
    0.3848648468648577, -0.07273261951252645, -0.015655728135791993,
};
constexpr double coif1_hi[] = {
    -0.015655728135791993, 0.07273261951252645, 0.3848648468648577,
    -0.8525720202116004, 0.33789766245748176, 0.07273261951252645,
};

constexpr double coif2_lo[] = {
    0.01638733646320364, -0.04146493678687178, -0.0673725547237256,
    0.38611006682276283, 0.8127236354494135, 0.41700518442323903,
    -0.07648859907828076, -0.059434418646431085, 0.02368017194684777,
    0.005611434819368834, -0.001823208870911032, -0.000720549445520347,
};
constexpr double coif2_hi[] = {
    -0.000720549445520347, 0.001823208870911032, 0.005611434819368834,
    -0.02368017194684777, -0.059434418646431085, 0.07648859907828076,
    0.41700518442323903, -0.8127236354494135, 0.38611006682276283,
    0.0673725547237256, -0.04146493678687178, -0.01638733646320364,
};

constexpr double coif3_lo[] = {
    -0.0037935128643808015, 0.0077825964256727454, 0.023452696142077165,
    -0.06577191128146936, -0.06112339000297254, 0.4051769024091182,
    0.7937772226260872, 0.42848347637737, -0.07179982161915484,
    -0.08230192710629981, 0.03455502757329773, 0.015880544863669452,
    -0.009007976136730624, -0.002574517688136797, 0.0011175187708306303,
    0.0004662169598204029, -7.0983302506379e-05, -3.4599773197272774e-05,
};
constexpr double coif3_hi[] = {
    -3.4599773197272774e-05, 7.0983302506379e-05, 0.0004662169598204029,
    -0.0011175187708306303, -0.002574517688136797, 0.009007976136730624,
    0.015880544863669452, -0.03455502757329773, -0.08230192710629981,
    0.07179982161915484, 0.42848347637737, -0.7937772226260872,
    0.4051769024091182, 0.06112339000297254, -0.06577191128146936,
    -0.023452696142077165, 0.0077825964256727454, 0.0037935128643808015,
};

constexpr double coif4_lo[] = {
    0.000892313902537003, -0.0016294924252267858, -0.00734616793626805,
    0.016068947131575025, 0.026682304669604834, -0.08126671024919373,
    -0.05607731960356926, 0.41530842700068227, 0.7822389344242826,
    0.43438603311435653, -0.06662747236681715, -0.09622042453595264,
    0.03933442260558915, 0.025082253337949608, -0.015211728187697211,
    -0.0056582838001308835, 0.003751434697146086, 0.0012665610789256603,
    -0.0005890202246332164, -0.0002599743371222568, 6.233885431278718e-05,
    3.1229861599195265e-05, -3.2596479400307506e-06, -1.7849909144933466e-06,
};
constexpr double coif4_hi[] = {
    -1.7849909144933466e-06, 3.2596479400307506e-06, 3.1229861599195265e-05,
    -6.233885431278718e-05, -0.0002599743371222568, 0.0005890202246332164,
    0.0012665610789256603, -0.003751434697146086, -0.0056582838001308835,
    0.015211728187697211, 0.025082253337949608, -0.03933442260558915,
    -0.09622042453595264, 0.06662747236681715, 0.43438603311435653,
    -0.7822389344242826, 0.41530842700068227, 0.05607731960356926,
    -0.08126671024919373, -0.026682304669604834, 0.016068947131575025,
    0.00734616793626805, -0.0016294924252267858, -0.000892313902537003,
};

constexpr double coif5_lo[] = {
    -0.000212081862067494, 0.0003585777411617577, 0.0021782943778456947,
    -0.004159312627578639, -0.010131584846900275, 0.023408322118927783,
    0.028169744270532353, -0.09192158806008609, -0.05204667025355476,
    0.42157126673075435, 0.7742936228603274, 0.4379823066591633,
    -0.06203775157498195, -0.10556315130733723, 0.041287530472117834,
    0.03267479946705735, -0.019758391600965465, -0.009159507338676163,
    0.006761520220620417, 0.0024315754425382886, -0.0016616273039298788,
    -0.0006375589261258812, 0.00030185794166824473, 0.00014035632812373243,
    -4.12198619242655e-05, -2.1270221672515614e-05, 3.7007277113394796e-06,
    2.0612203985788783e-06, -1.6237995172048335e-07, -9.604010112767892e-08,
};
constexpr double coif5_hi[] = {
    -9.604010112767892e-08, 1.6237995172048335e-07, 2.0612203985788783e-06,
    -3.7007277113394796e-06, -2.1270221672515614e-05, 4.12198619242655e-05,
    0.00014035632812373243, -0.00030185794166824473, -0.0006375589261258812,
    0.0016616273039298788, 0.0024315754425382886, -0.006761520220620417,
    -0.009159507338676163, 0.019758391600965465, 0.03267479946705735,
    -0.041287530472117834, -0.10556315130733723, 0.06203775157498195,
    0.4379823066591633, -0.7742936228603274, 0.42157126673075435,
    0.05204667025355476, -0.09192158806008609, -0.028169744270532353,
    0.023408322118927783, 0.010131584846900275, -0.004159312627578639,
    -0.0021782943778456947, 0.0003585777411617577, 0.000212081862067494,
};

constexpr double dmey_lo[] = {
    -1.4365285561512298e-11, -7.469126243131314e-12, 1.5948220376007338e-10,
    6.566107477501252e-11, -5.354661524235208e-10, -2.806422733082681e-10,
    1.938771385048967e-10, 8.031282793544753e-10, 2.7401127555268437e-09,
    -2.599722307138777e-10, -1.0327555706468292e-08, -5.0955753129695344e-09,
    2.1054434686613348e-08, 1.5332187008308236e-08, -1.951315174308255e-09,
    -3.446187301605587e-08, -6.078112996424366e-08, 4.312069537347364e-08,
    1.456373910893833e-07, 4.3618863922157485e-08, -3.734654780401874e-07,
    -1.800801351568687e-07, 2.111080788674914e-07, 5.546816142894574e-07,
    4.842699650535833e-07, -1.266471650548775e-06, -7.653455329825533e-07,
    1.598557779894273e-06, 3.0451603243667442e-06, -3.243360915045258e-06,
    1.1577909122976559e-06, 1.1177186946052709e-06, -1.3549803128173268e-05,
    1.620604982282546e-05, 5.126473327397362e-06, -3.650872066093205e-05,
    3.7143276809381894e-05, 2.8101977885134556e-05, -9.620587731682702e-05,
    2.8655801770291285e-05, 0.00013197670423296495, -6.661715199264205e-05,
    -0.00013117527753196543, -0.00010510848828051122, 0.00017130459619731471,
    0.0008620992435222222, -0.0005904665086522719, -0.0026930557222715626,
    0.0021870211663891966, 0.006043276103549478, -0.0063766077198046224,
    -0.011051986402509581, 0.015263882694859201, 0.017400361871062302,
    -0.03208849763459623, -0.024321317604204917, 0.0636680519882818,
    0.030622240513508404, -0.13269726300610277, -0.03504725934556964,
    0.4440937611215571, 0.7437513171745023, 0.44409371714706997,
    -0.03504725934556964, -0.13269789667909807, 0.030622240513508404,
    0.06366470334935237, -0.024321317604204917, -0.03209767648808505,
    0.017400361871062302, 0.015250146163322466, -0.011051986402509581,
    -0.006384234186800459, 0.006043276103549478, 0.0021943529755872526,
    -0.0026930557222715626, -0.0005838114122948623, 0.0008620992435222222,
    0.0001646787471945993, -0.00010510848828051122, -0.00013907584912847378,
    -6.661715199264205e-05, 0.00013893554835790525, 2.8655801770291285e-05,
    -9.179827914547799e-05, 2.8101977885134556e-05, 2.4534558499031893e-05,
    -3.650872066093205e-05, 1.1348899209095597e-05, 1.620604982282546e-05,
    -1.4979021850681048e-05, 1.1177186946052709e-06, 7.986863464457933e-06,
    -3.243360915045258e-06, -3.0929261557919366e-06, 1.598557779894273e-06,
    8.226860668017866e-07, -1.266471650548775e-06, -2.3691962467509637e-07,
    5.546816142894574e-07, -8.929885829093929e-08, -1.800801351568687e-07,
    1.2841436109411909e-07, 4.3618863922157485e-08, -6.114490307774717e-08,
    4.312069537347364e-08, 2.8337029148134442e-08, -3.446187301605587e-08,
    -8.325722563161884e-09, 1.5332187008308236e-08, -5.958749900571877e-10,
    -5.0955753129695344e-09, 1.1412136800853575e-09, -2.599722307138777e-10,
    -5.508904719751368e-10, 8.031282793544753e-10, 1.6732938798085598e-10,
    -2.806422733082681e-10, -2.5214289885393697e-11, 6.566107477501252e-11,
    3.880857582527912e-12, -7.469126243131314e-12,
};
constexpr double dmey_hi[] = {
    -7.469126243131314e-12, -3.880857582527912e-12, 6.566107477501252e-11,
    2.5214289885393697e-11, -2.806422733082681e-10, -1.6732938798085598e-10,
    8.031282793544753e-10, 5.508904719751368e-10, -2.599722307138777e-10,
    -1.1412136800853575e-09, -5.0955753129695344e-09, 5.958749900571877e-10,
    1.5332187008308236e-08, 8.325722563161884e-09, -3.446187301605587e-08,
    -2.8337029148134442e-08, 4.312069537347364e-08, 6.114490307774717e-08,
    4.3618863922157485e-08, -1.2841436109411909e-07, -1.800801351568687e-07,
    8.929885829093929e-08, 5.546816142894574e-07, 2.3691962467509637e-07,
    -1.266471650548775e-06, -8.226860668017866e-07, 1.598557779894273e-06,
    3.0929261557919366e-06, -3.243360915045258e-06, -7.986863464457933e-06,
    1.1177186946052709e-06, 1.4979021850681048e-05, 1.620604982282546e-05,
    -1.1348899209095597e-05, -3.650872066093205e-05, -2.4534558499031893e-05,
    2.8101977885134556e-05, 9.179827914547799e-05, 2.8655801770291285e-05,
    -0.00013893554835790525, -6.661715199264205e-05, 0.00013907584912847378,
    -0.00010510848828051122, -0.0001646787471945993, 0.0008620992435222222,
    0.0005838114122948623, -0.0026930557222715626, -0.0021943529755872526,
    0.006043276103549478, 0.006384234186800459, -0.011051986402509581,
    -0.015250146163322466, 0.017400361871062302, 0.03209767648808505,
    -0.024321317604204917, -0.06366470334935237, 0.030622240513508404,
    0.13269789667909807, -0.03504725934556964, -0.44409371714706997,
    0.7437513171745023, -0.4440937611215571, -0.03504725934556964,
    0.13269726300610277, 0.030622240513508404, -0.0636680519882818,
    -0.024321317604204917, 0.03208849763459623, 0.017400361871062302,
    -0.015263882694859201, -0.011051986402509581, 0.0063766077198046224,
    0.006043276103549478, -0.0021870211663891966, -0.0026930557222715626,
    0.0005904665086522719, 0.0008620992435222222, -0.00017130459619731471,
    -0.00010510848828051122, 0.00013117527753196543, -6.661715199264205e-05,
    -0.00013197670423296495, 2.8655801770291285e-05, 9.620587731682702e-05,
    2.8101977885134556e-05, -3.7143276809381894e-05, -3.650872066093205e-05,
    -5.126473327397362e-06, 1.620604982282546e-05, 1.3549803128173268e-05,
    1.1177186946052709e-06, -1.1577909122976559e-06, -3.243360915045258e-06,
    -3.0451603243667442e-06, 1.598557779894273e-06, 7.653455329825533e-07,
    -1.266471650548775e-06, -4.842699650535833e-07, 5.546816142894574e-07,
    -2.111080788674914e-07, -1.800801351568687e-07, 3.734654780401874e-07,
    4.3618863922157485e-08, -1.456373910893833e-07, 4.312069537347364e-08,
    6.078112996424366e-08, -3.446187301605587e-08, 1.951315174308255e-09,
    1.5332187008308236e-08, -2.1054434686613348e-08, -5.0955753129695344e-09,
    1.0327555706468292e-08, -2.599722307138777e-10, -2.7401127555268437e-09,
    8.031282793544753e-10, -1.938771385048967e-10, -2.806422733082681e-10,
    5.354661524235208e-10, 6.566107477501252e-11, -1.5948220376007338e-10,
    -7.469126243131314e-12, 1.4365285561512298e-11,
};

constexpr double dghm_lo[] = {
    0.4242640687119285, 0.8, -0.05,
    -0.21213203435596426, 0.4242640687119285, 0.0,
    0.45, 0.7071067811865476, 0.0,
    0.0, 0.45, -0.21213203435596426,
    0.0, 0.0, -0.05,
    0.0,
};
constexpr double dghm_hi[] = {
    -0.05, -0.21213203435596426, 0.07071067811865475,
    0.3, 0.45, -0.7071067811865476,
    -0.6363961030678927, 0.0, 0.45,
    -0.21213203435596426, 0.6363961030678927, -0.3,
    -0.05, 0.0, -0.07071067811865475,
    0.0,
};

constexpr double cl3_lo[] = {
    0.009071596984152655, -0.07957571156981813, -0.01111039188167237,
    -0.07931675066416578, 0.6980351842023949, -0.07957571156981813,
    0.69576358876313, 0.0974599446324711, 0.6980351842023949,
    0.07957571156981813, -0.69576358876313, 0.0974599446324711,
    0.009071596984152655, 0.07957571156981813, 0.01111039188167237,
    -0.07931675066416578,
};
constexpr double cl3_hi[] = {
    -0.07957571156981813, -0.009071596984152655, -0.07931675066416578,
    0.01111039188167237, 0.07957571156981813, 0.6980351842023949,
    -0.0974599446324711, 0.69576358876313, 0.07957571156981813,
    -0.6980351842023949, 0.0974599446324711, 0.69576358876313,
    -0.07957571156981813, 0.009071596984152655, 0.07931675066416578,
    0.01111039188167237,
};

constexpr double stt_lo[] = {
    0.013340450633902733, 0.09620371866098214, 0.004975755478411608,
    -0.09699672656711697, 0.6937663305526448, 0.09620371866098214,
    -0.6994850511259851, 0.035882309624117384, 0.6937663305526448,
    -0.09620371866098214, 0.6994850511259851, 0.035882309624117384,
    0.013340450633902733, -0.09620371866098214, -0.004975755478411608,
    -0.09699672656711697,
};
constexpr double stt_hi[] = {
    0.09620371866098214, -0.013340450633902733, 0.09699672656711697,
    0.004975755478411608, -0.09620371866098214, 0.6937663305526448,
    0.035882309624117384, 0.6994850511259851, -0.09620371866098214,
    -0.6937663305526448, -0.035882309624117384, 0.6994850511259851,
    0.09620371866098214, 0.013340450633902733, -0.09699672656711697,
    0.004975755478411608,
};

struct Raw {
  const char* name;
  int multiplicity;
  int support_lo;
  int support_hi;
  int taps;
  const double* lowpass;
  const double* highpass;
};

constexpr Raw kFilters[] = {
    {"haar", 1, 0, 1, 2, haar_lo, haar_hi},
    {"db2", 1, 0, 3, 4, db2_lo, db2_hi},
    {"db3", 1, 0, 5, 6, db3_lo, db3_hi},
    {"db4", 1, 0, 7, 8, db4_lo, db4_hi},
    {"db5", 1, 0, 9, 10, db5_lo, db5_hi},
    {"db6", 1, 0, 11, 12, db6_lo, db6_hi},
    {"db7", 1, 0, 13, 14, db7_lo, db7_hi},
    {"db8", 1, 0, 15, 16, db8_lo, db8_hi},
    {"db9", 1, 0, 17, 18, db9_lo, db9_hi},
    {"db10", 1, 0, 19, 20, db10_lo, db10_hi},
    {"sym4", 1, 0, 7, 8, sym4_lo, sym4_hi},
    {"sym5", 1, 0, 9, 10, sym5_lo, sym5_hi},
    {"sym6", 1, 0, 11, 12, sym6_lo, sym6_hi},
    {"sym7", 1, 0, 13, 14, sym7_lo, sym7_hi},
    {"sym8", 1, 0, 15, 16, sym8_lo, sym8_hi},
    {"sym9", 1, 0, 17, 18, sym9_lo, sym9_hi},
    {"sym10", 1, 0, 19, 20, sym10_lo, sym10_hi},
    {"coif1", 1, 0, 5, 6, coif1_lo, coif1_hi},
    {"coif2", 1, 0, 11, 12, coif2_lo, coif2_hi},
    {"coif3", 1, 0, 17, 18, coif3_lo, coif3_hi},
    {"coif4", 1, 0, 23, 24, coif4_lo, coif4_hi},
    {"coif5", 1, 0, 29, 30, coif5_lo, coif5_hi},
    {"dmey", 1, -61, 60, 122, dmey_lo, dmey_hi},
    {"dghm", 2, 0, 2, 4, dghm_lo, dghm_hi},
    {"cl3", 2, 0, 3, 4, cl3_lo, cl3_hi},
    {"stt", 2, 0, 3, 4, stt_lo, stt_hi},
};

}  // namespace

std::vector<EmbeddedFilter> embedded_filters() {
  std::vector<EmbeddedFilter> out;
  for (const Raw& raw : kFilters) {
    EmbeddedFilter f;
    f.name = raw.name;
    f.multiplicity = raw.multiplicity;
    f.support_lo = raw.support_lo;
    f.support_hi = raw.support_hi;
    const int n = raw.taps * raw.multiplicity * raw.multiplicity;
    f.lowpass.assign(raw.lowpass, raw.lowpass + n);
    f.highpass.assign(raw.highpass, raw.highpass + n);
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace mwde::detail
