//! Chebyshev tables for the Riemann-Siegel remainder coefficients C0..C4
//! and their p-derivatives, on p in [0, 1] (argument u = 2p - 1).
//!
//! Generated by tools/gen_rs_coeffs.py; do not edit by hand.

pub(crate) const C0: &[f64] = &[
    0.6426672862397699,
    1.1561562766114722e-16,
    0.2719729999978555,
    -2.403703357979455e-17,
    0.010738605819340136,
    -2.563950248511418e-16,
    -0.0013743815296339663,
    -1.3721140001799388e-16,
    -0.00012468221880349635,
    -1.8829009637505729e-16,
    -5.7645997080377e-07,
    -1.0816665110907542e-16,
    2.728067427632274e-07,
    -9.614813431917815e-17,
    8.077952936216514e-09,
    -1.8428392411175802e-16,
    -2.0884642327029594e-10,
    -3.325122978538243e-16,
    -1.3115755292575451e-11,
    -1.9830552703330474e-16,
    -1.4382158425243717e-14,
    -4.947622745174371e-16,
    1.0159652859726479e-14,
    -3.312603690215431e-16,
    1.9880629856621707e-16,
    5.608641168618716e-17,
    -4.807406715958898e-17,
    1.201851678989724e-16,
    -3.265030394588751e-16,
    -4.807406715958897e-17,
    -3.8058636501341273e-17,
    4.006172263299082e-17,
    -9.614813431917792e-17,
    4.1664191538310424e-16,
    -2.0030861316495405e-16,
    1.7827466571680922e-16,
    -1.6425306279526235e-16,
    1.3220368468886992e-16,
    -7.211110073938351e-17,
    1.2018516789897254e-17,
    1.8428392411175772e-16,
    -1.041604788457761e-16,
    -1.702623211902108e-16,
    -6.810492847608432e-17,
    -3.050950564268701e-16,
    2.6440736937773855e-16,
    1.7627157958515902e-16,
    2.4037033579794412e-17,
    -1.201851678989719e-17,
    3.244999533272244e-16,
    -3.2049378106392527e-17,
    3.204937810639252e-17,
    2.483826803245423e-16,
    1.1217282337237405e-16,
    2.143302160865004e-16,
    2.0832095769155187e-16,
    1.2018516789897224e-16,
];

pub(crate) const C1: &[f64] = &[
    6.692376835332727e-17,
    0.01069791392100304,
    -6.309721314696069e-17,
    0.01717065124337791,
    6.009258394948636e-18,
    0.0027932111497884857,
    1.0015430658247727e-17,
    -3.6375653719279484e-05,
    1.6775846352564947e-17,
    -2.7108955231150735e-05,
    -1.2519288322809658e-19,
    -1.0483749866919267e-06,
    2.1282790148776416e-18,
    5.8864671651201705e-08,
    -9.514659125335335e-18,
    4.322967254179733e-09,
    9.139080475651044e-18,
    -1.1369607022118736e-11,
    -2.2785104747513545e-17,
    -6.699833230615649e-12,
    -9.389466242107232e-18,
    -1.0079679645920373e-13,
    -6.009258394948627e-18,
    5.154942159800098e-15,
    8.763501825966747e-18,
    1.6143622292263021e-16,
    9.765044891791512e-18,
    -2.0907211499092076e-17,
    2.053945740460955e-17,
    2.253471898105733e-18,
    1.9029318250670637e-17,
    -7.198590785615538e-19,
    1.201851678989724e-17,
    -5.0077153291238495e-18,
    2.1783561681688753e-17,
    1.5023145987371563e-18,
    1.3020059855722017e-17,
    -6.259644161404825e-18,
    1.5774303286740142e-17,
    6.478731707053988e-18,
    -9.76504489179151e-18,
    -1.0015430658247701e-18,
    -1.7527003651933467e-17,
    0.0,
    -1.9780475550039178e-17,
    -2.528896241207537e-17,
    -1.3020059855721973e-17,
    -7.135994344001466e-18,
    9.139080475650989e-18,
    -2.854397737600585e-17,
    1.0015430658247665e-18,
    9.51465912533528e-18,
    -2.303549051396965e-17,
    1.8528546717758213e-17,
    -8.51311605951053e-18,
    1.91545111338987e-17,
    -1.151774525698484e-17,
];

pub(crate) const C2: &[f64] = &[
    0.00314611585397884,
    -5.4840752278761725e-15,
    -0.0023087838845203476,
    8.323448841420004e-16,
    5.769820766741573e-05,
    -4.702244694047307e-16,
    0.0003523886202367408,
    1.4003215216822693e-16,
    2.5246667458412415e-05,
    -2.3911840696566452e-17,
    -3.442821197071733e-06,
    -1.126735949052869e-18,
    -3.535074556898839e-07,
    1.126735949052869e-18,
    3.7308301871129315e-09,
    -3.129822080702412e-19,
    1.2776951863298171e-09,
    4.6947331210536185e-19,
    2.1874614716046337e-11,
    3.4428042887726515e-19,
    -1.914140688182906e-12,
    2.003086131649543e-18,
    -6.562811247429977e-14,
    1.760524920395106e-18,
    1.2581884764423688e-15,
    -1.2675779426844753e-18,
    8.043642747405187e-17,
    1.471016377930131e-18,
    2.8168398726321665e-18,
    3.7557864968428884e-19,
    7.198590785615537e-19,
    6.885608577545297e-19,
    4.694733121053609e-19,
    -2.5351558853689487e-18,
    -1.8778932484214442e-19,
    -1.3301743842985239e-18,
    1.4397181571231076e-18,
    7.824555201756032e-20,
    4.381750912983373e-19,
    -1.1267359490528676e-18,
    -2.3160683397197812e-18,
    -5.790170849299452e-19,
    8.919992930001852e-19,
    1.0641395074388175e-18,
    2.269121008509241e-18,
    -9.389466242107192e-20,
    3.1298220807023973e-19,
    -4.3035053609657966e-19,
    5.007715329123829e-19,
    -1.377121715509054e-18,
    0.0,
    1.2519288322809578e-19,
    -1.4397181571231032e-18,
];

pub(crate) const C3: &[f64] = &[
    9.123287436301253e-13,
    7.123256269983176e-05,
    -9.346007097605653e-13,
    0.00023234305290251598,
    -4.6767209949791796e-14,
    -0.00012929912041357032,
    -7.0660618928511105e-15,
    1.807449640146114e-05,
    2.4472056231157306e-14,
    6.5261851894456925e-06,
    -1.093699405500835e-14,
    -1.1696365391534967e-07,
    2.4341291408814824e-15,
    -7.349476132612319e-08,
    -1.8839181559268e-16,
    -1.7750909908863887e-09,
    -3.299614928580518e-17,
    2.5555529492488815e-10,
    6.658696476694378e-18,
    1.137663651644188e-11,
    3.7166637208341123e-20,
    -3.349862696297929e-13,
    -2.542980440570708e-19,
    -2.553744583354824e-14,
    7.042099681580422e-20,
    6.78126079840938e-17,
    1.8583318604170545e-19,
    2.942815211380438e-17,
];

pub(crate) const C4: &[f64] = &[
    0.0001676574041811021,
    -2.5059841056560352e-11,
    -0.00022728764041516356,
    4.33943378578715e-12,
    6.477387435891578e-05,
    -2.0730527252465627e-12,
    -8.492200138350985e-06,
    6.145872170111361e-13,
    -2.6161420092841805e-06,
    -1.1742459440279638e-13,
    8.336770719155269e-07,
    9.362307211001947e-15,
    6.324691230163198e-08,
    2.3624992502870067e-15,
    -1.0059939476387814e-08,
    -8.001781377075804e-16,
    -7.822659752709595e-10,
    6.2746819784332e-17,
    3.1676217318599006e-11,
    7.314981044241665e-18,
    3.5006886717442908e-12,
    -8.421177535889923e-19,
    -1.4311303165614212e-14,
    6.455258041448722e-20,
    -7.269479299604652e-15,
    -6.357451101426767e-20,
    -8.78951847201258e-17,
    9.780694002195021e-20,
    8.41139684188772e-18,
];

pub(crate) const C0_DP: &[f64] = &[
    6.816739972481489e-14,
    2.310617179758777,
    1.358723369389852e-13,
    0.1348331797759326,
    1.361607813419427e-13,
    -0.036984513333509585,
    1.4128868183896554e-13,
    -0.003999356622294395,
    1.4513060103946937e-13,
    -9.52562058251171e-06,
    1.5190904450897144e-13,
    1.3532778249639087e-05,
    1.5666837715777075e-13,
    4.3805459700417157e-07,
    1.61668080142368e-13,
    -1.4310767423953238e-08,
    1.727251155890735e-13,
    -9.44596334654299e-10,
    1.9533595184313353e-13,
    -2.6195358886646936e-13,
    2.1040717189766466e-13,
    8.88619085153028e-13,
    2.519672029571294e-13,
    -5.430366502902154e-15,
    2.8244315690711135e-13,
    -2.4515771165258992e-14,
    2.7683451573849265e-13,
    -1.951606818066174e-14,
    2.6385451760540364e-13,
    1.705227223873227e-14,
    2.69431109395916e-13,
    2.1619308618893224e-14,
    2.6446345578942513e-13,
    3.3926269811748e-14,
    2.0946672295885534e-13,
    6.116824120218176e-14,
    1.8450826975850204e-13,
    8.482068224469953e-14,
    1.6494212442454929e-13,
    9.578156955708582e-14,
    1.630672358053253e-13,
    6.629614169920458e-14,
    1.8014955433603257e-13,
    9.490021165915999e-14,
    1.9186360203391907e-13,
    1.4859694159028912e-13,
    1.4427027554592614e-13,
    1.1616297094661987e-13,
    1.3975131323292477e-13,
    1.1847052617028015e-13,
    7.614932238078879e-14,
    1.2488040179155867e-13,
    6.961124924708472e-14,
    7.321680428405387e-14,
    4.583061069214141e-14,
    2.692147760936978e-14,
];

pub(crate) const C1_DP: &[f64] = &[
    0.15133322172955052,
    -4.827562770158587e-15,
    0.2598747877750889,
    -4.322785064982902e-15,
    0.05382697285455398,
    -4.41893319930208e-15,
    -0.002037250141215741,
    -4.659303535100026e-15,
    -0.0010187318370759152,
    -5.196130618382104e-15,
    -4.2809448754488826e-05,
    -5.19112290305298e-15,
    3.319050659955944e-06,
    -5.293280295767107e-15,
    2.5808773409345536e-07,
    -4.760459384748328e-15,
    -1.2903011573286237e-09,
    -5.345360535189995e-15,
    -5.171678798245495e-10,
    -3.70483299336902e-15,
    -7.98055429776006e-12,
    -2.953675694000441e-15,
    4.863766048130526e-13,
    -2.4248609552449618e-15,
    1.212192611144367e-14,
    -3.266157130537769e-15,
    -4.02169618081935e-15,
    -4.281721799284087e-15,
    -1.7637173389174054e-15,
    -6.582141028600356e-15,
    -2.0251200790976706e-15,
    -8.865659218680832e-15,
    -1.935857553356038e-15,
    -1.040402936778768e-14,
    -1.27483912991169e-15,
    -1.336659375649735e-14,
    -1.4851631737348918e-15,
    -1.524148237572132e-14,
    -5.587358378469776e-16,
    -1.763917647530582e-14,
    -1.5694179841473997e-15,
    -1.607676929261918e-14,
    -1.4051649213521372e-15,
    -1.313223267909436e-14,
    -1.4051649213521372e-15,
    -9.650868982287463e-15,
    3.14684831282143e-15,
    -7.255177968834621e-15,
    4.488415249493706e-15,
    -9.009881420159612e-15,
    1.0083034815190852e-14,
    -9.210190033324566e-15,
    8.142044353622456e-15,
    -4.4188080064188784e-15,
    4.213992449457713e-15,
    -2.579974937564604e-15,
];

pub(crate) const C2_DP: &[f64] = &[
    -9.346065390541903e-15,
    -0.008436268599711107,
    3.2441701304208837e-15,
    0.010034002476451673,
    -6.743968479283121e-15,
    0.009110831153773022,
    2.6605209088114938e-15,
    0.0006535042680912423,
    -1.26037935189886e-15,
    -0.00015438909057795497,
    -3.9955308682246787e-16,
    -1.6676242695085638e-05,
    -3.4997670506414166e-16,
    2.9211517802878777e-07,
    -4.0856697441489087e-16,
    8.31886875504636e-08,
    -3.897880419306764e-16,
    1.4161956253553088e-09,
    -4.21712227153841e-16,
    -1.5877663420002737e-10,
    -4.478775397485132e-16,
    -5.6453791453948854e-12,
    -6.161367748070748e-16,
    1.2989475234349399e-13,
    -7.781050674834245e-16,
    9.108658605026601e-15,
    -6.513472732149769e-16,
    7.432701477252071e-16,
    -8.102170420314311e-16,
    4.277840819904044e-16,
    -8.537841653948087e-16,
    3.41400992563018e-16,
    -9.391657117563704e-16,
    2.813084086135318e-16,
    -6.045251348876691e-16,
    3.068477567920634e-16,
    -4.183007210858758e-16,
    9.952834216633591e-17,
    -4.2988106278447473e-16,
    3.2925728288988644e-17,
    -2.541102547322274e-16,
    4.0349666264415364e-16,
    -1.5915145280371637e-16,
    2.5364078142012256e-16,
    -3.42183448083193e-16,
    -1.4572451607750383e-16,
    -3.252824088474e-16,
    -2.0331324236242794e-16,
    -2.4437650806124306e-16,
    -2.9946137668160546e-16,
    2.553934817853154e-17,
    -2.9946137668160546e-16,
];

pub(crate) const C3_DP: &[f64] = &[
    0.00060951831075224,
    -7.944377873661623e-12,
    0.0009341063707051531,
    -4.675721955771017e-13,
    -0.0018540102641250386,
    2.8070316361956706e-13,
    0.0007319721441463678,
    4.5028864904799364e-13,
    0.00022588624490545595,
    -3.3281715034904014e-13,
    -9.056421914588996e-06,
    1.0466261185129384e-13,
    -3.910021142313611e-06,
    -1.2175586911017317e-14,
    -8.82935533552057e-08,
    -1.6256452378272368e-15,
    1.8211906097977612e-08,
    4.861083164642949e-16,
    8.341460430852205e-10,
    6.6821701422996325e-18,
    -3.047833216436234e-11,
    3.708839165632343e-18,
    -2.339485515459738e-12,
    2.6087067042654575e-17,
    9.959501226700252e-15,
    1.9326651348337367e-17,
    3.178240428290873e-15,
];

pub(crate) const C4_DP: &[f64] = &[
    -3.8077256852464976e-11,
    -0.0010336764093848922,
    2.4084850521311456e-11,
    0.0007846247139364163,
    -2.7988354908134344e-11,
    -0.0002517572758062361,
    1.3472699596796912e-11,
    -4.794447248581246e-05,
    -3.7357424795149e-12,
    3.5772071811281316e-05,
    4.915429189857697e-13,
    2.42498893466024e-06,
    7.960140170168407e-14,
    -6.108628558180945e-07,
    -4.324855931324028e-14,
    -4.750624514037684e-08,
    4.762128949214543e-15,
    2.558777276964571e-09,
    4.953452038799678e-16,
    2.7808963002544255e-10,
    -6.059335548239868e-17,
    -1.9654637141006992e-12,
    1.014453581907668e-17,
    -7.060690355266483e-13,
    4.205698420943856e-18,
    -8.199022764601659e-15,
    1.0563149522370622e-17,
    9.420764462914246e-16,
];

