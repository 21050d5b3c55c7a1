// Reference decomposition of a fixed 16x16 plane, produced by an
// independent implementation of the same transform (verified for
// perfect reconstruction and stage orthogonality). Row-major.
#![allow(clippy::excessive_precision)]

pub const GOLD_X: &[f64] = &[-0.724808, 0.601768, 0.191673, 0.471678, 0.079094, -0.064834, -0.209747, -0.142411, -0.0347, 0.640697, 0.790138, -0.894547, 0.423611, -0.055887, -0.104176, 0.312509, 0.724261, 0.137314, -0.373905, 0.081134, -0.382863, -0.393091, 0.842422, -0.415752, -0.481759, -0.040247, -0.875107, -0.530617, -0.293994, 0.632219, 0.093912, -0.683653, 0.260336, -0.405953, -0.529813, 0.441243, -0.698858, 0.406586, -0.370324, -0.552336, 0.157244, -0.645123, 0.652308, -0.493305, 0.516458, -0.998001, -0.582716, 0.818662, 0.442348, -0.650108, -0.633126, 0.978193, -0.907144, 0.746149, 0.26937, 0.963836, 0.115235, -0.093047, -0.026363, 0.693579, 0.267718, 0.573824, -0.354018, -0.634447, 0.636683, -0.668275, 0.781707, 0.557266, 0.780756, -0.651324, -0.350943, -0.742824, 0.354274, -0.975547, 0.536127, -0.201558, 0.822764, 0.880957, -0.869941, -0.876655, -0.306516, 0.059613, -0.417705, -0.06335, 0.883104, 0.137166, 0.122899, -0.86856, -0.05099, 0.000895, 0.080439, 0.893706, 0.35662, 0.097716, -0.115195, -0.922677, 0.870912, 0.632166, 0.115589, -0.788342, -0.060755, -0.79837, 0.419611, -0.649492, 0.261463, -0.42035, -0.755711, -0.106063, 0.556696, 0.91035, -0.243471, -0.874964, 0.81888, 0.58797, -0.03764, -0.650527, -0.926168, 0.184489, 0.585809, -0.404651, -0.592067, -0.381058, -0.949021, 0.208276, 0.787096, -0.697641, -0.427911, 0.893135, 0.543196, 0.617434, 0.127604, 0.387886, -0.653495, 0.072364, -0.455952, 0.051509, 0.035557, 0.856206, -0.437603, 0.964995, -0.935631, 0.465348, -0.978242, -0.770735, -0.250691, -0.092972, 0.972118, 0.374813, -0.216812, 0.019635, 0.539157, 0.474333, 0.377683, 0.359716, 0.219438, -0.709087, 0.305778, 0.988784, 0.477891, 0.265539, 0.38753, -0.750187, -0.165049, 0.824356, -0.110007, -0.606325, -0.809806, 0.828822, 0.773812, 0.741793, 0.187498, 0.631202, 0.285108, 0.287618, -0.929878, 0.455023, 0.837964, -0.156722, 0.114594, -0.20704, 0.744705, -0.29286, 0.385679, 0.843568, 0.040912, 0.291549, -0.827103, 0.571709, -0.551422, 0.165499, -0.80898, -0.179988, -0.889241, 0.232814, 0.930529, -0.112782, 0.260511, -0.492398, -0.026872, 0.724872, -0.096095, 0.856121, 0.064797, -0.199976, 0.281768, -0.002436, -0.720842, -0.210829, -0.769589, 0.186107, -0.868858, 0.555979, -0.893098, 0.09168, -0.199516, -0.19217, -0.134226, -0.768625, 0.140938, 0.62469, 0.364105, -0.803334, -0.681169, -0.105448, -0.04892, -0.177616, 0.034628, 0.484347, -0.489956, 0.258451, 0.527786, -0.638637, 0.459419, 0.021451, -0.099668, -0.854935, -0.814059, -0.476689, -0.104516, 0.754375, 0.233602, -0.441138, 0.840455, 0.469579, 0.204484, 0.976078, 0.39389, -0.034595, 0.177182, -0.504303, -0.951378, -0.447196, 0.206471, -0.40165, 0.765775, 0.56326];
pub const GOLD_LL: &[f64] = &[0.07223317702318272, 0.06459248016114186, -0.050043922697013576, -0.0724933275981905, -0.06218364344701845, -0.1787214909465635, -0.16928530348766901, 0.037381055785133684, 0.01936826550162596, 0.09563781480796324, 0.07597973947149947, -0.10461145418104224, -0.11114322281067163, 0.18942192623010987, 0.09682774779958656, -0.4419566540887223, 0.31996809986604896, 0.12182503473089239, -0.07400504861975898, -0.385273011502684, -0.3623990023715939, 0.3071465351709887, 0.27047716646509234, -0.6903003656190272, 0.7449068093489887, 0.14789897214396924, -0.2723466524835772, -0.39947337298340163, -0.2738376444468971, 0.19212046850979658, 0.2056524355928796, -0.3709432865936863, 0.7109424158206856, 0.10840275611547066, -0.18342221752372034, 0.09581653123810956, 0.3633043124764039, 0.2887940056074928, 0.041762492775097054, -0.1263088694108358, 0.15448987468589573, 0.037184270860393026, 0.04012045977297678, 0.37898237989434447, 0.706822848572181, 0.4416215147652119, -0.1214072395990179, -0.39661694715989226, -0.19215028024635433, 0.08366494255718934, 0.24751775087686878, 0.2712483708944145, 0.2288544865903777, -0.054234379887499407, -0.3000189533154908, -0.2828905170095895, -0.13131274406295812, 0.27779594276296427, 0.46956473397815446, 0.17124681047061385, -0.4094713750909832, -0.7949612391456476, -0.3949245193426067, 0.3523285563483681];
pub const GOLD_L1_D1_RE: &[f64] = &[-0.24521662708238795, -0.3797383733138261, 0.06876070631301621, 0.33773408017896167, -0.28026171485349094, 0.47335909873766024, 0.23400719052711488, -0.11225903552666869, 0.5728901753796178, -0.7737285193592147, -0.798094725584232, -0.06883825321158243, 0.41468859211546044, 0.21850774887169155, 0.0710230356501702, -0.24555884595659305, 0.2042624029145708, 0.29828716887768164, 0.3967656594395605, 0.39386837136047764, 0.3983009261838249, 0.16432210674640502, -0.21624217883947966, -0.08109217447536599, -0.1124433567826958, -0.018674390519445142, 0.11002935689917352, 0.554329009230808, -0.02713270753801346, -0.5147037262567731, 0.19374592181613526, -0.22823803992332553, 0.13697105967047427, -0.18049098776143022, -0.39592538299572577, -0.07955887162235448, -0.21220699754452493, -0.24040846343658906, -0.5804751432351439, -0.2699742676347955, 0.4858899785989908, 0.21524501376473448, 0.339976363470797, -0.4442147018744769, -0.29467891289236364, -0.42567759144518197, -0.31025049917520503, -0.589495756653405, -0.4526732510765793, -0.25759154810136925, 0.049065273515428894, 0.043268883682626165, -0.14002513171379857, -0.124757715372132, 0.16429826392324998, -0.3673909298979192, 0.4557996982149582, -0.09784822279980794, -0.6750605148867856, 0.37495432157175007, 0.26570602778180313, 0.050981605641383, 0.3688044928171406, 0.004375714800416026];
pub const GOLD_L1_D1_IM: &[f64] = &[-0.3426320318019763, 0.09685819734500525, 0.23773748145689527, -0.26200061098738675, -0.17794839229857307, 0.43911010952441853, -0.20723467084023553, 0.022437858109173776, -0.0923826185364117, -0.41141243396581756, 0.24070319665950093, 0.2807606985015462, 0.004379415008277574, -0.09192024056768744, -0.017509379921238313, 0.14661439897174794, 0.340845722271501, -0.12631600336940443, -0.30297086184746935, -0.17462549956881476, -0.020297725853529944, 0.08405857825080622, -0.25479533760079626, 0.005415655908956644, -0.13620298223705027, 0.2327648498093724, 0.39897240632860786, 0.1607906234118395, -0.04975681253381352, 0.37077905379999554, -0.06611283418942931, 0.25809489683630743, -0.07202862468593389, -0.23132186956105769, 0.029969549647142286, 0.09519472577226926, -0.23183051962830828, -0.24739007696201426, -0.11393709508829711, 0.1401094789082355, 0.23824652350347827, -0.3272408412491052, -0.1864611782138569, -0.12677728780620515, 0.18564975114418894, 0.3258704782566738, -0.12044205354978363, 0.19049826260682076, 0.03450709806123712, 0.4009736367272464, 0.5084840409156406, -0.32594930138704753, -0.2744431924568737, -0.17235286850954556, -0.20329185528256918, 0.03386459725554199, -0.14100210479255584, -0.7271427484435687, 0.035034468938653925, 0.3210372921613454, -0.06274548657150174, 0.18484847431572848, -0.06757028690389008, -0.30169706475415436];
pub const GOLD_L1_D2_RE: &[f64] = &[0.03541149947214605, 0.034528329879945065, 0.28311448397548006, -0.046903297776992085, -0.24027685842406823, -0.148644580588452, -0.1362646349152981, 0.13925882116006694, -0.10569329231310094, -0.2763579765074211, -0.1990271393255794, -0.4067387939759766, -0.0054041486169493745, -0.0007006766385567728, 0.26412967653843555, 0.0008764468223516226, -0.16213892728512763, 0.25829953745687423, 0.13217249278737386, 0.10665449444111327, 0.04506808924490746, 0.037993905033318925, 0.3444512855464778, -0.1610953784477681, 0.08062273852272231, 0.06532911703268152, 0.017969848566257374, 0.10174679119935834, 0.1128022034387315, 0.1909208862961948, 0.3431572622582783, -0.20955234537735765, -0.010380165352621993, 0.02598617177606232, 0.07734215994829223, -0.07191765305989664, 0.04462498316030263, 0.2075692631742153, -0.4548521519606198, 0.0930681727825276, 0.16071336278622939, -0.07312827954382145, -0.030899222858293437, -0.13633086280721496, 0.04968091593136756, -0.3455595455769528, 0.007919097095033936, -0.13535773846199048, -0.31857343576920333, -0.016401720678515, -0.027953792599862234, -0.0573429062870754, 0.05410242463911301, -0.09496235069991005, 0.3562709411587539, -0.014729221975423604, 0.1071534632069467, 0.11324894817467611, -0.02942862968357906, 0.08804169437532719, 0.02970949498793577, 0.0537060594607633, -0.05541997201157235, -0.09160936281106119];
pub const GOLD_L1_D2_IM: &[f64] = &[-0.20203495529610369, 0.0016281154542199983, -0.2313417425213375, -0.45896750084280846, 0.16497646931412926, 0.5051147088218706, 0.4465201334871107, -0.21684260069174122, -0.04449584004457963, 0.231319219706511, 0.14701272810556307, 0.21665827285430855, 0.549079735027735, 0.5768634939839083, 0.6097130451009266, -0.31422968289152564, 0.42684503859828626, 0.42723562785640723, 0.24409413618320683, 0.17811057836573255, 0.35440665677481015, 0.4948122940043982, -0.034484542453186856, -0.30676903420171164, 0.018084287086528632, 0.03449300309048216, 0.3129290069901917, -0.007617847756520035, 0.13576440790637076, 0.1150025692216695, -0.7025350681430341, 0.16070667782961265, -0.00979916031807759, -0.3917676370498487, -0.13118650688774838, -0.3189202074464963, -0.13731280509841265, -0.7848961411778839, -0.5758547711506469, -0.14739943730616153, -0.02177270995249297, -0.3017623133671077, -0.26153685076516153, -0.22375161647081251, 0.07660632047293202, 0.15628995206048943, 0.34577470774606134, -0.21334807685108856, 0.03082901170056942, 0.6522588984530655, 0.31391652061012515, 0.014269001108198402, -0.3482261148922981, 0.2861817417830021, -0.07712757835713718, -0.035226790589201355, 0.03861281498327483, -0.13504065596750137, 0.040300594534320576, 0.34483849230423097, -0.016151725944322078, 0.19023795167223687, -0.31173042826905784, -0.16012355960736566];
pub const GOLD_L1_D3_RE: &[f64] = &[-0.31159579183847946, 0.21239055620626832, 0.11542929958310856, -0.14560441845725766, 0.38686110306320876, 0.4854825217031284, -0.2995234038162553, 0.4542815846159716, -0.07403889969777014, 0.053659262652074456, -0.053354636958586645, -0.705069412356803, -0.11047186792871379, 0.04714932521850636, -0.28442085584599114, 0.0028008156539201115, 0.31179948946986735, 0.29454054607023683, -0.23325580814752744, -0.18220683706155913, -0.2553797815097246, -0.37788221396735444, 0.3157859091921426, -0.1558853008479393, 0.21973398802942248, 0.22443483370774248, -0.2792289219948036, -0.018299757806536872, 0.42544954370884686, -0.30395552760906164, 0.3461169403643201, -0.5374939872299664, 0.04112594963547923, -0.06641076577375526, -0.0718382799731935, -0.35832192072227176, 0.14304428281603124, 0.5185148462759053, -0.6236358109659988, -0.448315291514637, -0.08796835361889721, -0.08660760155422385, -0.26217243198779994, -0.39536275190265646, 0.42006246508544526, 0.2782873858381489, 0.27752580095329255, -0.09657797071768122, -0.1951812744216732, 0.5050275411080646, 0.06723710658411078, 0.09243150202072004, 0.4734690786288595, -0.3429745818324458, 0.14946741543858166, 0.18579362877041092, 0.0735962433546979, -0.09176200690687027, -0.1476269401014994, -0.05298233904293996, 0.2297535815685161, -0.02233828887528587, -0.49711473168008047, 0.09260953978697894];
pub const GOLD_L1_D3_IM: &[f64] = &[-0.3788168011119598, 0.0060368968566595765, 0.1316432299618577, -0.19302053141140835, -0.032254496809548845, 0.22363600649258172, 0.08955138233108059, -0.3284696726976038, 0.047080522737548564, 0.13674458586682342, 0.1221010366479959, -0.1381340773313506, -0.2690893071300886, -0.17303017636060714, 0.36048499141554924, -0.665445465031407, 0.22101997068635337, -0.09848502875805967, 0.0005379370465357355, 0.11957154247233204, 0.14372736575351083, -0.1385703121371136, -0.003505480772402743, 0.08788514493735311, -0.18275509240087578, 0.11930908506911359, 0.3341531251168773, -0.34260004733677113, 0.2267730141509518, 0.40159569364248204, -0.46600710416099955, 0.3711571419261129, 0.28554289186357545, -0.34872697525925644, 0.12754058451166106, -0.21594797814382855, -0.10868883924999903, 0.0277099593640389, 0.17892693373771207, 0.14003813737023185, -0.18201542474035853, 0.10295864063666374, 0.19389375092107017, -0.1581277264840263, 0.0014617298748409477, -0.09067300436633091, 0.36180223261862043, -0.14370825112057464, -0.11312545724219393, 0.11295133834383421, 0.10152227267300493, 0.058556765341085545, -0.08637522243534819, 0.14780958818399598, -0.447414908929651, 0.19883500633601514, -0.0031798084548283643, -0.04470193879116265, -0.07864657496326465, 0.013168502720504821, -0.29490848397654296, 0.4461878849533955, -0.07419763702989432, -0.19493444416251673];
pub const GOLD_L1_D4_RE: &[f64] = &[-0.17270138333404242, 0.017590556224687415, 0.08289742648504762, -0.03287203238853104, -0.15250298633301643, -0.06648572120022159, 0.3590782277345243, -0.5393531317410273, -0.23365552210275245, -0.12317836587528906, 0.1605805706019808, 0.13879702795459106, -0.021885205584978952, 0.22786722523514397, 0.0543141659510054, -0.36078049840435567, -0.007501314280017906, 0.18740245993601193, 0.33049317142631235, -0.4427430714897729, 0.055878114988719564, 0.08055202725960403, -0.16624358364890252, -0.015293115897787792, 0.16361853846492655, -0.1018895281468161, -0.05407431808760716, -0.07804230763562521, -0.10514830602421237, -0.07695849180173928, -0.21003895209592427, 0.7886259973471287, 0.19782717860393204, 0.026424886624301362, 0.3162603499109809, -0.14704308481153194, 0.10395554230055712, -0.049991102702297216, 0.25754587339607565, -0.09875412018709857, 0.12606120820960154, -0.3114790674253153, 0.22828893917757856, -0.29453065487644414, -0.08631672757654113, 0.0403898261015238, 0.06568728960492383, -0.317960120749037, -0.5254736538795115, 0.24127084863439113, -0.1334182347766487, -0.07367314138979653, -0.18337902897268035, 0.5152616875478112, -0.09777506674121758, -0.006870200686618949, 0.14557574965512554, 0.049944813992643916, 0.0017174571780938358, 0.07357371446364822, -0.029955642620071332, 0.17403018933261757, -0.2629275449904701, 0.015742787876407174];
pub const GOLD_L1_D4_IM: &[f64] = &[-0.379608747436497, 0.20028100751102276, 0.1449474876011473, -0.1883428378017976, 0.3462448677350625, 0.4843905271713564, -0.07901109956874071, 0.03405424303821781, -0.054462017958157485, 0.039687082118522045, 0.10067875388693542, -0.6992215967056904, -0.13939700349037085, 0.07682936305839529, -0.5262689536953389, 0.4185277125396393, 0.44426285820266037, 0.43582939453292663, -0.4706417140211402, -0.21996094500882193, -0.0658808588975976, -0.44425038849131754, 0.24811619749287447, -0.08093150035878237, 0.08921382699079429, 0.042220689021507, -0.08081868829095963, -0.04590172939905792, 0.2478939893169558, -0.09624587657287087, 0.2863287975234567, -0.27015006560066623, 0.3589714536923858, -0.17669840907927167, -0.051500169419955034, -0.4197960351190186, 0.2683559030121905, 0.21925139693620832, -0.21287247376679236, -1.013308892676405, -0.6912630152509909, 0.23075585859213232, -0.4249014679820679, -0.2522381199994872, 0.24769691949670208, 0.50067727376365, -0.009409788815062462, 0.1585658569746801, 0.19996623698637087, 0.3680446239367877, 0.037147525633909634, 0.14753296485798753, 0.5078457895618831, -0.20120918006355107, -0.03546338555965127, 0.14980579666544575, 0.010390755686080569, -0.09484788112408948, -0.11972234040406075, -0.08748763615341894, 0.30002879869764393, -0.2571596490503294, -0.2872180299707342, 0.10064986793492828];
pub const GOLD_L1_D5_RE: &[f64] = &[-0.20594229574983955, -0.027058527790786626, -0.3153770970827972, -0.31544947570604687, 0.23800255560040318, 0.46972333912104625, 0.4319850357063291, -0.2668309063729687, 0.028877525113136092, 0.3016339788989937, 0.16748235068045358, 0.10728627385119721, 0.4585932435579167, 0.6269785671874403, 0.5009894718224469, -0.21992043926873744, 0.39062887469112534, 0.3382054437353061, 0.3771269446180577, 0.09201977325119913, 0.3692140060162935, 0.5496822933077878, -0.04315194719266428, -0.2894746332991623, -0.033215382372556154, 0.08945834459685116, 0.21103180789524437, 0.09706126639731463, 0.10884884303240912, -0.06252218956944912, -0.5041651408770687, 0.1603294871225557, -0.021243755389483525, -0.39707655994654634, -0.11606692733766434, -0.3243988950931463, -0.1347387444409772, -0.7128576313785423, -0.6047355631936405, -0.18601858965527518, 0.026673074656119098, -0.3381578419034449, -0.23822826232138697, -0.28884234932618963, 0.13776918980032032, 0.289282486079516, 0.20323240825195044, -0.235229292364065, 0.07601549314938082, 0.655690610956333, 0.3156667839591278, 0.03478111726714958, -0.47454916175029777, 0.24235103047678472, -0.013421796361811757, 0.00034061211965745946, -0.025525047340476722, -0.10433119037047792, 0.032552285838125, 0.34216146147435533, 0.07600301174487649, 0.13696867514510722, -0.2704569701945055, -0.1964287425911876];
pub const GOLD_L1_D5_IM: &[f64] = &[-0.009169150357589157, -0.03079221497594182, -0.00839962167864774, -0.2595201589464568, 0.011567393238220909, 0.17660800957299005, 0.26140812247773054, -0.061926142113133506, 0.050133215738028473, 0.1264739759180522, 0.5090302476599783, 0.01894162076614175, 0.003762519471654951, 0.005629077889318565, -0.08220287295724409, 0.09714811953086708, -0.16531444866985265, 0.007054035890766979, -0.23981172375639406, -0.033318374512715465, -0.13497880047197974, -0.1631981040786265, 0.26223001980779803, -0.13406810298616617, -0.0897409099858849, -0.12532027520921563, -0.03747559190085364, -0.10035136828906357, -0.008864627332553611, -0.137841121229785, -0.17682090165941933, -0.026581706330090785, 0.18452187234478284, -0.13489894976232597, 0.06592142377438096, -0.12864597210385603, 0.1219913751533292, 0.12388620766124922, 0.09557859269815273, -0.23979533023397476, -0.16342410881926184, 0.3173942270530063, -0.06474510732416086, -0.028689578516436387, -0.09546662028012619, 0.2402927479407424, 0.1955488239515319, 0.10205188943034676, 0.051394990189757184, 0.05593387391367439, 0.15873709157099247, 0.22467531387709325, 0.07361585328790518, -0.3341971668837919, -0.02819871792036405, -0.08237117582314363, -0.07128621717198966, -0.08434054523753472, -0.15996651753520597, -0.11588201616606353, 0.11868001129488985, -0.010856690411475925, 0.14184843731130325, -0.03359815778335982];
pub const GOLD_L1_D6_RE: &[f64] = &[-0.1673262059408358, 0.07406723868642669, -0.08610723061464848, -0.12584093633814974, -0.0804661223784474, -0.001061768256683136, 0.2814839150917096, -0.08842094974205074, -0.19363403397395418, 0.2870977689694155, -0.22829621970027486, 0.12922696633219602, -0.20452771536005207, -0.006967749340489324, 0.2889475243474509, -0.012613505124374216, 0.21005433968608828, -0.16664259041649987, -0.2547281695277379, -0.35063015908785733, 0.11190576505685505, 0.18786435567073534, 0.11761784063403519, -0.3041268538243698, 0.03053809454576514, -0.025732863569313917, 0.2781048516945503, 0.18685648899550583, 0.4369218562340062, -0.0011057521753801963, 0.14451568539688037, 0.11923084010381581, -0.21250898936396742, 0.2459184213400356, -0.2746157369537837, 0.09308186417244564, -0.038914480778184095, -0.3809475779798525, 0.12432770858726398, -0.18757564062192178, -0.01823277357474938, -0.106619193340386, -0.2676337900265785, 0.19085628382892064, 0.24860815316286647, 0.14342608400711584, 0.18684053924609464, -0.19790164861107254, 0.1555275785814782, 0.43740878951639184, 0.26715172084908234, -0.1101594888383693, -0.3915507819199494, -0.2313260010927051, -0.05430179816238671, -0.07095786360991188, -0.39912184780551757, -0.14870923776243614, -0.20535571756583554, -0.0750172916285665, 0.31335945147601896, 0.0468478938540385, -0.20801522317337762, -0.0832254834442666];
pub const GOLD_L1_D6_IM: &[f64] = &[0.2870753221368455, 0.2725713881177841, 0.05520733904003344, -0.3189263887531065, 0.19591797318932896, -0.5767427762155876, -0.0905718587793069, 0.07908367628362978, -0.44551489786035897, 0.6210505908652331, 0.7646616785382606, 0.07512435647386714, -0.27492194861704544, -0.31284661631832283, -0.1862409023674372, 0.3677985313804855, -0.36461779527531163, 0.09385238963265298, -0.5413921581162089, -0.3673853333011854, -0.6278415721149752, -0.06453997219627697, 0.32948317179052766, -0.01603101262689697, 0.14358577592921754, -0.19446405116348672, -0.011934087273697524, -0.5856563921211297, 0.06405187946225697, 0.504718157256436, -0.13504533638054164, 0.2578319873650817, -0.02053565338658373, 0.031134457086763802, 0.45188973719538883, 0.05771916876729496, 0.31761443993438304, 0.2634773730604141, 0.4081833671836589, 0.31258616471876977, -0.5293486203748766, 0.031573519565888664, -0.49898348681813764, 0.30085577957078136, 0.2872975278327442, 0.44303825466492636, 0.4134334737945448, 0.5753396579702393, 0.3345611614266094, 0.1022275880533723, 0.17322571475650408, 0.19639731674005717, 0.121356355144756, -0.026961414144023352, -0.09290055789306055, 0.2778999909562782, -0.2116569571099455, 0.016820182379205215, 0.4512321718488651, -0.35702058513043644, -0.35926713097199625, 0.15554034047289841, -0.3422396225994044, -0.10112152203004375];
pub const GOLD_L2_D1_RE: &[f64] = &[-0.17318936550266065, 0.002138778834004946, -0.41904600544050385, -0.24903937212327404, 0.039724037897864946, 0.04690917527147448, 0.23886898577904586, -0.9644124445646082, 0.11549475936069085, 0.15316274550113243, -0.27484122008527123, -0.31051262918655365, 0.390916948146399, 0.4929661362200543, -0.1794374592673458, 0.24772459933205926];
pub const GOLD_L2_D1_IM: &[f64] = &[-0.2939660197850123, 0.11306560218236225, -0.06304837164609962, 0.38397803836311184, -0.1699940028750048, 0.20429743800494493, -0.34944511890683666, -0.07937734050488814, -0.12709479248708944, -0.4248187222250997, -0.19551800839048478, -0.2219724806167565, 0.12223490149489419, 0.1331026229427012, -0.13859058548354578, -0.6306746523265411];
pub const GOLD_L2_D2_RE: &[f64] = &[0.7005658366721683, -0.17825655269734797, 0.25545714239300976, 0.09104259432575301, 0.001083157147435843, -0.2769137243282973, 0.26204924697463156, 0.5127196349098074, 0.09162581076284858, 0.2474996160108442, 0.531133235537916, 0.22496993844959862, 0.39050021361598014, -0.10647495199406729, -0.21170527418571558, -0.29226155727319403];
pub const GOLD_L2_D2_IM: &[f64] = &[0.2413528178217793, -0.1965314113506545, 0.34105574501742447, 0.25630234597199814, -0.6402166592661964, 0.3791483536295938, -0.15813662941141857, 0.00812818674753834, -0.037917207121775445, 0.35789739178211977, -0.06337354498186157, -0.3439678452334456, -0.14255754559823433, -0.15019653170302383, -0.5270475302840384, 0.4770839196934946];
pub const GOLD_L2_D3_RE: &[f64] = &[-0.4617229509051695, 0.24192187787761235, 0.06990114731858356, 0.14859579131418266, 0.11866151355560388, -0.3716076813775715, -0.2879317218285447, 0.04361958354895217, 0.1550405541085646, 0.03918310986336438, 0.039303939760443385, 0.09273076404491389, 0.3152774873758668, 0.34728159325348396, -0.18571720436194258, 0.2510661805066802];
pub const GOLD_L2_D3_IM: &[f64] = &[-0.07750632025210918, -0.37197325122014907, -0.31843742519620716, -0.08460876437731417, 0.3025603497570842, -0.3249251498947372, 0.06375267819080564, -0.26335919622793735, -0.07340982100847017, 0.1837224028697735, 0.3331129237000619, 0.5930650056762815, -0.32090109350947926, -0.5310558336119856, 0.1864927692507809, -0.6044028416517434];
pub const GOLD_L2_D4_RE: &[f64] = &[0.0997474119383544, 0.09075066176949251, 0.5101160789782262, 0.1259291646179061, 0.5362359296005491, -0.10037879507421539, 0.2950292745528708, -0.37974780095528726, 0.2415692077859264, -0.3101499955768432, -0.36537727003557585, -0.4177704767587779, 0.4618343542261858, 0.5103343089343776, 0.15375600632354666, -0.1545810799758392];
pub const GOLD_L2_D4_IM: &[f64] = &[-0.008610834228803071, 0.026641728390855567, 0.2941872137529296, -0.22032363330594415, -0.04469987214092376, -0.1838529538284821, -0.5660372399068652, 0.196355509041082, -0.22767576176351806, -0.03776953351677315, 0.10409654220397282, -0.1982927436740365, 0.371969228570515, 0.24131001316311804, -0.317425735172666, 0.4426724294598296];
pub const GOLD_L2_D5_RE: &[f64] = &[-0.22978322943812818, 0.47310011436969757, 0.10004918340134125, -0.03711157535067799, -0.3837472613250514, 0.4599338102805141, -0.09478993672125138, 0.46903319098837837, -0.4423483337369136, -0.43083645936603365, 0.1399297967831353, 0.11129125538768382, 0.009698709362056059, 0.024222670587646537, -0.09093709897666859, 0.003935351517726963];
pub const GOLD_L2_D5_IM: &[f64] = &[0.019627007203029494, 0.1386957429282156, 0.2613878493175063, 0.5163216460962993, -0.33740697668666425, -0.8106081323230817, 0.12472581420075603, 0.20952249617564414, 0.8821546633786334, 0.22815095352817685, 0.06730318490576352, 0.24900923181411388, 0.326026487521299, -0.11017333954386138, 0.20251608771538326, -0.018164626984485243];
pub const GOLD_L2_D6_RE: &[f64] = &[0.26265053463945975, 0.026370732429447662, -0.36784993088903434, 0.25453322729436817, 0.352349831413831, -0.37439129716367936, 0.6929532973335397, -0.23725283824165913, -0.2648072132955273, 0.37250791554056695, 0.10051480941931057, 0.1262904919393683, -0.10640589795975991, 0.0727185726919328, 0.1993501306706375, 0.1992325900132605];
pub const GOLD_L2_D6_IM: &[f64] = &[-0.44480131835687725, -0.1215174235341693, -0.2663301818428087, 0.42998089376389403, 0.5081783769024856, 0.11468496613628602, -0.04409658948611836, 0.8272109159922149, -0.15393855046204047, -0.7068667753529637, 0.35823860985388384, 0.1891431971984303, -0.4093615715320742, 0.22882477481612118, 0.12872275230973143, -0.27336807627771453];
