// Generated by tests/oracle/gen_reference.py. Do not edit by hand.
#pragma once
#include <array>

namespace ladderlab::reference {

inline constexpr double zeta_half = -1.460354508809586812889499;
inline constexpr double gram_g0 = 17.84559954041086081682634;

struct ThetaPoint { double t; double theta; };
inline constexpr std::array<ThetaPoint, 10> theta_points{{
    {0.5, -1.125052715405562861575901},
    {3.0, -2.994564696010825236240455},
    {9.5, -3.17678469885478270735593},
    {10.0, -3.067074396289895291702014},
    {10.5, -2.944848400419433744487136},
    {50.0, 26.46136607016140964745495},
    {500.0, 843.7901005881892295154034},
    {5000.0, 14197.89761760219780996927},
    {123456.75, 548503.6947703169057514286},
    {1000000.0, 5488816.353078403444882823},
}};

inline constexpr std::array<double, 10> first_zeros{{
    14.13472514173469379045725,
    21.02203963877155499262848,
    25.01085758014568876321379,
    30.4248761258595132103119,
    32.93506158773918969066237,
    37.58617815882567125721776,
    40.91871901214749518739813,
    43.32707328091499951949612,
    48.00515088116715972794247,
    49.77383247767230218191678,
}};

struct ZPoint { double t; double z; };
inline constexpr std::array<ZPoint, 23> z_small{{
    {0.0, -1.460354508809586812889499},
    {1.75, -0.5605459829193655617205135},
    {3.5, -0.5688748138132953049016637},
    {5.25, -0.7767531576031126224367167},
    {7.0, -1.095579302151126956135189},
    {8.75, -1.423650862366223527926045},
    {10.5, -1.546013309246498321690898},
    {12.25, -1.164574657840396742798754},
    {14.0, -0.1056262677798826101389108},
    {15.75, 1.343729230608366320433264},
    {17.5, 2.301845755335056883280502},
    {19.25, 1.824681343523372535070535},
    {21.0, 0.02508386695029759025124715},
    {22.75, -1.406738331700121960819527},
    {24.5, -0.6418575530699722968417728},
    {26.25, 1.764743705455343707638911},
    {28.0, 2.808937442443375279281902},
    {29.75, 0.9683655460343180769075526},
    {31.5, -0.9005201138347157876542872},
    {33.25, 0.4668258384146933230939108},
    {35.0, 2.82647861132742248096064},
    {36.75, 1.617493227044342552792316},
    {38.5, -1.443960846610100533784565},
}};

inline constexpr std::array<ZPoint, 100> z_random{{
    {3111.490353309594411257422, -3.25088279638775040714761},
    {4567.470825831696856766939, -1.749668586213599104701501},
    {5003.219793891183144296519, -1.426131950521183704759512},
    {5146.273993249405975802802, 0.864895829654507266918183},
    {5788.351505967526463791728, -1.799907591610303313567624},
    {6237.359095257343142293394, -0.239655531219693503738575},
    {7810.629883851797785609961, -1.450812397544293747539621},
    {8672.345619393030574428849, -1.187966407304084359260151},
    {9541.961515023560423287563, 0.1560881235857634197301552},
    {11657.9181134350201318739, 1.149825668118767887919119},
    {12435.09561001897600363009, -0.5331257038002526289553073},
    {14992.52320605953354970552, 2.174663279214430385118418},
    {18175.85116212204229668714, 2.71564586664000083735995},
    {18572.25397551079367985949, 0.2708016974531030764697402},
    {21018.7320148641592822969, 0.2800701139138355340047687},
    {22195.38387747792512527667, -0.825684140784043093749834},
    {23167.8493090242482139729, -1.85392808649250535241151},
    {23498.93907109249266795814, 1.103569226201701412559542},
    {24665.8526697461711592041, 8.140236024684154051204541},
    {24839.56047176706124446355, -1.431875364402057484138483},
    {25892.31011964253048063256, 1.491739708490279716006173},
    {26281.74595234565640566871, -0.4097584703520120167057069},
    {28512.00665401246442343108, -0.2283984583718450779077906},
    {29951.61515340381083660759, 7.054693761107960507727959},
    {30116.8660212148170103319, -1.312297088347536351616411},
    {31443.48544481924545834772, -2.74905138688475120103269},
    {32677.24649162992864148691, 0.5760477694685394951599886},
    {32905.64713660145935136825, -5.441297982189775710848915},
    {33122.48500830746343126521, 2.467638144177955813637942},
    {33450.09752138960175216198, 0.1558311490939672014123156},
    {33472.31753508652036543936, 0.7443731477040259002492114},
    {35819.06618885642819805071, -0.5360634772029926484257647},
    {35945.16852948877931339666, -1.309061883572896366561084},
    {37043.27198336386936716735, 1.138147454270441278217532},
    {37446.59425932284648297355, -4.53433442038099761008439},
    {37597.92473230623727431521, -0.2821906437564110111379757},
    {37620.60872296564048156142, 3.003917130895806386772531},
    {37713.87559670709015335888, -1.39982583370940653539059},
    {40626.81354024027677951381, -0.7685068601252872132681318},
    {41513.17041744358721189201, 0.4662717584614072015354115},
    {41514.22048244267352856696, -1.276486183303356385797207},
    {42598.83591694231290603057, 0.7195258979615763950973968},
    {43895.78357403825066285208, -0.1767924434730309077923306},
    {44540.8904101483421982266, -1.620331226246653746493623},
    {45387.98846189045434584841, -0.6368422634756839412130219},
    {49314.7659570604155305773, -1.169644764155495968283433},
    {53426.40413229620753554627, 1.318255402974680524393964},
    {54204.12216394318966194987, -0.291884003816593710019352},
    {55510.81056509853806346655, -2.300299102217527863691357},
    {57146.50417308478790801018, -2.636147426027358835334971},
    {60177.22825756245583761483, -3.092938528921819297768838},
    {60334.31034601260034833103, -2.24032771595200350552603},
    {60787.42248443586868233979, 2.345282058378555795894214},
    {61869.26697735073685180396, 2.175850867602620241220508},
    {62184.29336760388832772151, -5.180407368886967351785977},
    {62197.53714794928964693099, 1.139161605173885408961428},
    {62438.93027219720534048975, -2.392917718778156841171267},
    {66060.68661775323562324047, -0.7972174437966114759881576},
    {66584.34739205529331229627, -0.9751169748340963339221226},
    {67002.28721767697425093502, 0.1495847001993775817772667},
    {67803.13486347702564671636, -0.6282854167768552208228506},
    {68403.39321222182479687035, 0.7796517243202572832723692},
    {68653.62876233593851793557, -3.717325166101675937733903},
    {69169.38039754919009283185, -0.05371768127787833178609909},
    {69887.09092830018198583275, 0.08742262482285455627796769},
    {70229.60210086872393731028, 0.8495443629373016247552495},
    {71088.02865666270372457802, 0.9621487693218107568720539},
    {71377.55811129685025662184, 0.5209713116246571543801759},
    {71705.18076977510645519942, 0.4147761585398068667878501},
    {71827.15418243304884526879, 2.320818568555636901892676},
    {72625.82279075270344037563, 1.717457595419800379418795},
    {72646.73410805886669550091, -1.01831390231171701356797},
    {73020.3808612420252757147, -0.4198826444772681027949788},
    {74308.27459895571519155055, 1.291913502577588290725646},
    {75745.16129428437852766365, 11.0785392264541592614404},
    {76669.58333156316075474024, 3.730645719404675529554699},
    {77093.16175345428928267211, -0.9713063602245786606080072},
    {77106.53528663219185546041, -2.004235354902487645674479},
    {77190.36064395480207167566, 1.297123708575165711528056},
    {81822.90479333544499240816, -0.6148702687692634298334581},
    {83396.72974794924084562808, 0.6506775559911969315347106},
    {83978.11474518192699179053, 0.3622239937810563865633643},
    {85881.03365441493224352598, -0.07614661336426659581883635},
    {86501.72819001127209048718, -0.7536122326528750534839812},
    {87085.12813062177156098187, 4.385706282655126317042293},
    {87896.50777388134156353772, 0.6615555004700644299412958},
    {88331.7411450098006753251, -0.8766775955200160034200789},
    {89089.99006322408968117088, 0.609523270873952650003967},
    {90128.9013052254740614444, 4.428896871824699328052527},
    {91230.65257852684590034187, 0.467947631436748790888205},
    {91579.32120836596004664898, -1.980905110697025686273824},
    {93515.55246375512797385454, -2.093188016869939993324388},
    {93551.66966933372896164656, 0.0005871245607554550732121947},
    {94508.07790019907406531274, 1.986983568978171968848039},
    {95010.34170762618305161595, -0.6037424012371152409112273},
    {95907.09233945461164694279, 0.1807930319274853121653244},
    {96333.55446502228733152151, -0.6935772738525572772185224},
    {97376.26213553747220430523, -0.8906972265624859618426375},
    {97513.23262086851173080504, -0.9281867944196988670908667},
    {98240.51692464460211340338, 0.8794728903732321489995734},
}};

inline constexpr std::array<ZPoint, 3> z_large{{
    {250000.5, 0.0692906476489100101684824},
    {612345.25, 0.4732505518966332126807786},
    {999999.5, 0.9981659296135637979273715},
}};

struct IntegralPoint { double T; double I; };
inline constexpr std::array<IntegralPoint, 2> hl_points{{
    {50, 115.91173533959898870},
    {200, 736.83271056146788622},
}};

}  // namespace ladderlab::reference
