//! Reference values frozen from a 60-digit mpmath evaluation (see oracle/gen_oracle.py).
#![allow(dead_code)]

// (m, x, sign, exp2, mantissa) for J_m(x)
pub const BESSEL_J: &[(u32, f64, i32, i64, f64)] = &[
    (0, 0.001_f64, 1, -1, 1.9999995000000312),
    (0, 0.1_f64, 1, -1, 1.99500312413208),
    (0, 0.5_f64, 1, -1, 1.8769396144816257),
    (0, 1_f64, 1, -1, 1.5303953731159332),
    (0, 2_f64, 1, -3, 1.7911262331298854),
    (0, 5.5_f64, -1, -8, 1.7520305709617143),
    (0, 10_f64, -1, -3, 1.9674861156107868),
    (0, 25_f64, 1, -4, 1.5402685324153298),
    (0, 60_f64, -1, -4, 1.46354886542499),
    (0, 150_f64, -1, -11, 1.5853370888075085),
    (0, 1000_f64, 1, -6, 1.5863479137548913),
    (1, 0.001_f64, 1, -11, 1.0239998720000054),
    (1, 0.1_f64, 1, -5, 1.598000833159744),
    (1, 0.5_f64, 1, -3, 1.9381476613989912),
    (1, 1_f64, 1, -2, 1.760202342979734),
    (1, 2_f64, 1, -1, 1.1534496155137468),
    (1, 5.5_f64, -1, -2, 1.3657528617161734),
    (1, 10_f64, 1, -5, 1.391127877403566),
    (1, 25_f64, -1, -3, 1.0028019966423192),
    (1, 60_f64, 1, -5, 1.491148280261322),
    (1, 150_f64, -1, -4, 1.0423226185236378),
    (1, 1000_f64, 1, -8, 1.2104478482149181),
    (2, 0.001_f64, 1, -23, 1.0485759126186693),
    (2, 0.1_f64, 1, -10, 1.2789336666111168),
    (2, 0.5_f64, 1, -6, 1.958657501355689),
    (2, 1_f64, 1, -4, 1.8384557589104076),
    (2, 2_f64, 1, -2, 1.411336114462551),
    (2, 5.5_f64, -1, -4, 1.8770477063565996),
    (2, 10_f64, 1, -2, 1.0185212547404825),
    (2, 25_f64, -1, -4, 1.7007168518781008),
    (2, 60_f64, 1, -4, 1.4884013367626787),
    (2, 150_f64, -1, -14, 1.5484814411159997),
    (2, 1000_f64, -1, -6, 1.5857426898307838),
    (3, 0.001_f64, 1, -36, 1.4316556758548502),
    (3, 0.1_f64, 1, -16, 1.3644802133037064),
    (3, 0.5_f64, 1, -9, 1.312629757228669),
    (3, 1_f64, 1, -6, 1.252054654890778),
    (3, 2_f64, 1, -3, 1.0315459957952164),
    (3, 5.5_f64, 1, -2, 1.024471460560428),
    (3, 10_f64, 1, -5, 1.868140137765978),
    (3, 25_f64, 1, -4, 1.7334892969841422),
    (3, 60_f64, -1, -5, 1.292694768692965),
    (3, 150_f64, 1, -4, 1.0422822934861087),
    (3, 1000_f64, -1, -8, 1.2358197312522106),
    (5, 0.001_f64, 1, -62, 1.2009598505921373),
    (5, 0.1_f64, 1, -29, 1.3975188951256727),
    (5, 0.5_f64, 1, -17, 1.0556050297792068),
    (5, 1_f64, 1, -12, 1.0230076629452163),
    (5, 2_f64, 1, -8, 1.8021452175031514),
    (5, 5.5_f64, 1, -2, 1.2836989485907502),
    (5, 10_f64, -1, -3, 1.872492225494349),
    (5, 25_f64, -1, -4, 1.0561279263747678),
    (5, 60_f64, 1, -6, 1.7571036306140224),
    (5, 150_f64, -1, -4, 1.0399781078516135),
    (5, 1000_f64, 1, -8, 1.2865041779796957),
    (10, 0.001_f64, 1, -132, 1.4651983747521924),
    (10, 0.1_f64, 1, -66, 1.9852628697588688),
    (10, 0.5_f64, 1, -42, 1.1492875574662689),
    (10, 1_f64, 1, -32, 1.1298405924600607),
    (10, 2_f64, 1, -22, 1.055029474714394),
    (10, 5.5_f64, 1, -9, 1.7180548496755097),
    (10, 10_f64, 1, -3, 1.659888853066871),
    (10, 25_f64, -1, -4, 1.2028775031763725),
    (10, 60_f64, 1, -4, 1.5548342932491375),
    (10, 150_f64, -1, -6, 1.3192184924939896),
    (10, 1000_f64, -1, -6, 1.5693198275863398),
    (25, 0.001_f64, 1, -358, 1.1280877237258014),
    (25, 0.1_f64, 1, -192, 1.2059292742222867),
    (25, 0.5_f64, 1, -134, 1.2440273640253035),
    (25, 1_f64, 1, -109, 1.2350863004111212),
    (25, 2_f64, 1, -84, 1.1999368867508025),
    (25, 5.5_f64, 1, -48, 1.3034674912447253),
    (25, 10_f64, 1, -28, 1.9366638335402786),
    (25, 25_f64, 1, -3, 1.2235872646192665),
    (25, 60_f64, 1, -4, 1.7203924519525358),
    (25, 150_f64, 1, -5, 1.0165757065135337),
    (25, 1000_f64, 1, -7, 1.550098895910709),
    (40, 0.001_f64, 1, -598, 1.156358533568166),
    (40, 0.1_f64, 1, -333, 1.9503707718090992),
    (40, 0.5_f64, 1, -240, 1.7885133730362044),
    (40, 1_f64, 1, -200, 1.7803521310161796),
    (40, 2_f64, 1, -160, 1.7480691634077279),
    (40, 5.5_f64, 1, -102, 1.9339230112256889),
    (40, 10_f64, 1, -68, 1.7800061177951683),
    (40, 25_f64, 1, -20, 1.7559216881006188),
    (40, 60_f64, -1, -4, 1.242339158475441),
    (40, 150_f64, -1, -5, 1.7016969517898877),
    (40, 1000_f64, 1, -7, 1.7778403885292855),
    (60, 0.001_f64, 1, -931, 1.8921317452741635),
    (60, 0.1_f64, 1, -532, 1.4654307658332795),
    (60, 0.5_f64, 1, -393, 1.8220864955370468),
    (60, 1_f64, 1, -333, 1.816494187919079),
    (60, 2_f64, 1, -273, 1.7942933337997071),
    (60, 5.5_f64, 1, -185, 1.1924499754017919),
    (60, 10_f64, 1, -134, 1.5047413121290631),
    (60, 25_f64, 1, -58, 1.6496910207834163),
    (60, 60_f64, 1, -4, 1.8280333154080466),
    (60, 150_f64, -1, -6, 1.7373378358903897),
    (60, 1000_f64, -1, -7, 1.311469036901383),
    (100, 0.001_f64, 1, -1622, 1.5763394510801942),
    (100, 0.1_f64, 1, -957, 1.029655347766401),
    (100, 0.5_f64, 1, -725, 1.1761841468195526),
    (100, 1_f64, 1, -625, 1.1740026291085537),
    (100, 2_f64, 1, -525, 1.165316551004915),
    (100, 5.5_f64, 1, -379, 1.0497933104511152),
    (100, 10_f64, 1, -293, 1.0499195445260896),
    (100, 25_f64, 1, -163, 1.293660761355421),
    (100, 60_f64, 1, -48, 1.3463720525581653),
    (100, 150_f64, -1, -7, 1.96601934315589),
    (100, 1000_f64, 1, -7, 1.494545280998727),
    (150, 0.001_f64, 1, -2518, 1.2081930152083225),
    (150, 0.1_f64, 1, -1522, 1.804070270382763),
    (150, 0.5_f64, 1, -1173, 1.101826074960593),
    (150, 1_f64, 1, -1023, 1.1004587532276242),
    (150, 2_f64, 1, -873, 1.0950063020789222),
    (150, 5.5_f64, 1, -655, 1.9765306940185632),
    (150, 10_f64, 1, -525, 1.141333821554548),
    (150, 25_f64, 1, -328, 1.1654921588864204),
    (150, 60_f64, 1, -146, 1.3169442701303893),
    (150, 150_f64, 1, -4, 1.3469609261344455),
    (150, 1000_f64, -1, -7, 1.452630840795779),
    (200, 0.001_f64, 1, -3439, 1.3780574238271772),
    (200, 0.1_f64, 1, -2110, 1.1759738824979877),
    (200, 0.5_f64, 1, -1646, 1.5358574735666128),
    (200, 1_f64, 1, -1446, 1.5344254332215967),
    (200, 2_f64, 1, -1246, 1.528710545948259),
    (200, 5.5_f64, 1, -954, 1.36749078204664),
    (200, 10_f64, 1, -782, 1.7722927718234927),
    (200, 25_f64, 1, -518, 1.2033562729689036),
    (200, 60_f64, 1, -271, 1.3793524358136051),
    (200, 150_f64, 1, -44, 1.4175259616469726),
    (200, 1000_f64, 1, -8, 1.0709840704056515),
    (250, 0.001_f64, 1, -4378, 1.3875086683397337),
    (250, 0.1_f64, 1, -2717, 1.3533451844110091),
    (250, 0.5_f64, 1, -2137, 1.8897674547192118),
    (250, 1_f64, 1, -1887, 1.888356299498249),
    (250, 2_f64, 1, -1637, 1.882722166644401),
    (250, 5.5_f64, 1, -1272, 1.6620944392919783),
    (250, 10_f64, 1, -1056, 1.1948823175807965),
    (250, 25_f64, 1, -727, 1.977133706251331),
    (250, 60_f64, 1, -415, 1.3478775201381485),
    (250, 150_f64, 1, -113, 1.1090073328325114),
    (250, 1000_f64, -1, -6, 1.6121642892233932),
    (300, 0.001_f64, 1, -5332, 1.9821437025823534),
    (300, 0.1_f64, 1, -3338, 1.1048928834141802),
    (300, 0.5_f64, 1, -2642, 1.6495212875722924),
    (300, 1_f64, 1, -2342, 1.648494080056747),
    (300, 2_f64, 1, -2042, 1.6443916216198566),
    (300, 5.5_f64, 1, -1604, 1.4295726403265392),
    (300, 10_f64, 1, -1345, 1.133617372729827),
    (300, 25_f64, 1, -949, 1.0940293671266261),
    (300, 60_f64, 1, -574, 1.3700027182781505),
    (300, 150_f64, 1, -201, 1.4096476664490438),
    (300, 1000_f64, 1, -12, 1.9162236468889513),
    (310, 0.001_f64, 1, -5524, 1.7166199922952277),
    (310, 0.1_f64, 1, -3464, 1.2968197248461402),
    (310, 0.5_f64, 1, -2744, 1.126938683814222),
    (310, 1_f64, 1, -2434, 1.1262594630424383),
    (310, 2_f64, 1, -2124, 1.123546658152053),
    (310, 5.5_f64, 1, -1672, 1.475718708318705),
    (310, 10_f64, 1, -1405, 1.8080331780018433),
    (310, 25_f64, 1, -995, 1.0300442022601317),
    (310, 60_f64, 1, -607, 1.0823572663765522),
    (310, 150_f64, 1, -220, 1.1414571855616245),
    (310, 1000_f64, 1, -10, 1.5970155687019458),
    (400, 0.001_f64, 1, -7273, 1.4884903401289205),
    (400, 0.1_f64, 1, -4615, 1.0839639487956307),
    (400, 0.5_f64, 1, -3687, 1.8497609840661131),
    (400, 1_f64, 1, -3287, 1.8488962722268167),
    (400, 2_f64, 1, -2887, 1.8454414552311453),
    (400, 5.5_f64, 1, -2303, 1.550789216158393),
    (400, 10_f64, 1, -1958, 1.483341854062384),
    (400, 25_f64, 1, -1430, 1.8246496272336283),
    (400, 60_f64, 1, -927, 1.3165171707318242),
    (400, 150_f64, 1, -416, 1.7497006570788445),
    (400, 1000_f64, 1, -6, 1.5716394860878775),
];
pub const BESSEL_Y: &[(u32, f64, i32, i64, f64)] = &[
    (0, 0.001_f64, -1, 2, 1.1178541528439807),
    (0, 0.1_f64, -1, 0, 1.5342386513503667),
    (0, 0.5_f64, -1, -2, 1.7780749340268263),
    (0, 1_f64, 1, -4, 1.4121114274508313),
    (0, 2_f64, 1, -1, 1.0207513452994903),
    (0, 5.5_f64, -1, -2, 1.357922371527644),
    (0, 10_f64, 1, -5, 1.7814773530751806),
    (0, 25_f64, -1, -3, 1.0179954581440491),
    (0, 60_f64, 1, -5, 1.5154864707023807),
    (0, 150_f64, -1, -4, 1.0422755441445977),
    (0, 1000_f64, 1, -8, 1.2072750022714402),
    (1, 0.001_f64, -1, 9, 1.2434026703733192),
    (1, 0.1_f64, -1, 2, 1.6147377736755066),
    (1, 0.5_f64, -1, 0, 1.471472392670243),
    (1, 1_f64, -1, -1, 1.5624256426005774),
    (1, 2_f64, -1, -4, 1.7125189046550007),
    (1, 5.5_f64, -1, -6, 1.5205272932089355),
    (1, 10_f64, 1, -3, 1.992123393655631),
    (1, 25_f64, -1, -4, 1.5812794365317986),
    (1, 60_f64, 1, -4, 1.4699137499178703),
    (1, 150_f64, 1, -11, 1.1406466039006002),
    (1, 1000_f64, -1, -6, 1.5861972027105138),
    (2, 0.001_f64, -1, 20, 1.2142561560112644),
    (2, 0.1_f64, -1, 6, 1.9944497381670339),
    (2, 0.5_f64, -1, 2, 1.3603427092935665),
    (2, 1_f64, -1, 0, 1.6506826068162543),
    (2, 2_f64, -1, -1, 1.2348162083813654),
    (2, 5.5_f64, 1, -2, 1.323364933045623),
    (2, 10_f64, -1, -8, 1.5022291052054053),
    (2, 25_f64, 1, -4, 1.9094885613655543),
    (2, 60_f64, -1, -5, 1.4174922207078562),
    (2, 150_f64, 1, -4, 1.0423943614991706),
    (2, 1000_f64, -1, -8, 1.2199645798931242),
    (3, 0.001_f64, -1, 32, 1.1857968791296014),
    (3, 0.1_f64, -1, 12, 1.2449541939972912),
    (3, 0.5_f64, -1, 5, 1.3143591970226214),
    (3, 1_f64, -1, 2, 1.4553794014911823),
    (3, 2_f64, -1, 0, 1.1277837768404277),
    (3, 5.5_f64, 1, -2, 1.0574801798587388),
    (3, 10_f64, -1, -2, 1.0054506287353493),
    (3, 25_f64, 1, -4, 1.8867976063502871),
    (3, 60_f64, -1, -4, 1.5171634906081322),
    (3, 150_f64, 1, -10, 1.2086964083416178),
    (3, 1000_f64, 1, -6, 1.5849772381306206),
    (5, 0.001_f64, -1, 57, 1.6962959361323693),
    (5, 0.1_f64, -1, 24, 1.458018094438548),
    (5, 0.5_f64, -1, 12, 1.9400150094744808),
    (5, 1_f64, -1, 8, 1.017210416507079),
    (5, 2_f64, -1, 3, 1.2419986410602468),
    (5, 5.5_f64, -1, -2, 1.304389549140985),
    (5, 10_f64, 1, -3, 1.0832243815148985),
    (5, 25_f64, -1, -3, 1.1764639449097813),
    (5, 60_f64, 1, -4, 1.5914341254472142),
    (5, 150_f64, -1, -8, 1.1910393191469146),
    (5, 1000_f64, -1, -6, 1.5824612300634042),
    (10, 0.001_f64, -1, 126, 1.3903805225074806),
    (10, 0.1_f64, -1, 60, 1.026204740285398),
    (10, 0.5_f64, -1, 36, 1.7748043079274012),
    (10, 1_f64, -1, 26, 1.8122496348424135),
    (10, 2_f64, -1, 16, 1.9711996796880995),
    (10, 5.5_f64, -1, 3, 1.4278006535318775),
    (10, 10_f64, -1, -2, 1.439256608733611),
    (10, 25_f64, -1, -3, 1.189747123998452),
    (10, 60_f64, 1, -5, 1.1612912179054562),
    (10, 150_f64, 1, -5, 1.9800433666598642),
    (10, 1000_f64, -1, -8, 1.522944146985643),
    (25, 0.001_f64, -1, 351, 1.4446984789305528),
    (25, 0.1_f64, -1, 185, 1.3514554386590345),
    (25, 0.5_f64, -1, 127, 1.3103193986589077),
    (25, 1_f64, -1, 102, 1.3205992834064852),
    (25, 2_f64, -1, 77, 1.362567943389321),
    (25, 5.5_f64, -1, 41, 1.28177698954254),
    (25, 10_f64, -1, 20, 1.8367684838308471),
    (25, 25_f64, -1, -2, 1.0600380881453095),
    (25, 60_f64, 1, -7, 1.336540584914482),
    (25, 150_f64, -1, -5, 1.836895084063618),
    (25, 1000_f64, -1, -6, 1.4169360849529589),
    (40, 0.001_f64, -1, 590, 1.7617228680166854),
    (40, 0.1_f64, -1, 325, 1.044514033552529),
    (40, 0.5_f64, -1, 232, 1.1391262573042091),
    (40, 1_f64, -1, 192, 1.1446165921283706),
    (40, 2_f64, -1, 152, 1.1668509379225858),
    (40, 5.5_f64, -1, 94, 1.0635022127344846),
    (40, 10_f64, -1, 60, 1.1820434364558594),
    (40, 25_f64, -1, 12, 1.487111879682126),
    (40, 60_f64, -1, -4, 1.4487213585551406),
    (40, 150_f64, -1, -5, 1.2702222537976364),
    (40, 1000_f64, 1, -6, 1.3488898132430844),
    (60, 0.001_f64, -1, 922, 1.435547164864816),
    (60, 0.1_f64, -1, 523, 1.8535492764647024),
    (60, 0.5_f64, -1, 384, 1.4907847206596738),
    (60, 1_f64, -1, 324, 1.4955301370494605),
    (60, 2_f64, -1, 264, 1.51466597756409),
    (60, 5.5_f64, -1, 177, 1.1437511496642758),
    (60, 10_f64, -1, 125, 1.8307374185685084),
    (60, 25_f64, -1, 49, 1.8113124790954878),
    (60, 60_f64, -1, -3, 1.583300166814649),
    (60, 150_f64, -1, -5, 1.9967990273365588),
    (60, 1000_f64, 1, -6, 1.477265336828043),
    (100, 0.001_f64, -1, 1613, 1.033880498407695),
    (100, 0.1_f64, -1, 948, 1.5828086900648684),
    (100, 0.5_f64, -1, 716, 1.385639311599493),
    (100, 1_f64, -1, 616, 1.3882661575418285),
    (100, 2_f64, -1, 516, 1.3988239467150068),
    (100, 5.5_f64, -1, 370, 1.554798881547858),
    (100, 10_f64, -1, 284, 1.560079374110719),
    (100, 25_f64, -1, 154, 1.301115101832411),
    (100, 60_f64, -1, 39, 1.5132043361556808),
    (100, 150_f64, 1, -4, 1.1820171399203179),
    (100, 1000_f64, -1, -6, 1.4360760484942896),
    (150, 0.001_f64, -1, 2508, 1.7985499521820667),
    (150, 0.1_f64, -1, 1512, 1.204496303866156),
    (150, 0.5_f64, -1, 1163, 1.9721874548970153),
    (150, 1_f64, -1, 1013, 1.974670814197094),
    (150, 2_f64, -1, 863, 1.984635773382032),
    (150, 5.5_f64, -1, 645, 1.100138627713899),
    (150, 10_f64, -1, 515, 1.908154040273552),
    (150, 25_f64, -1, 318, 1.8908931598118635),
    (150, 60_f64, -1, 136, 1.8003398509077235),
    (150, 150_f64, -1, -3, 1.166540790060652),
    (150, 1000_f64, 1, -6, 1.4525495020990982),
    (200, 0.001_f64, -1, 3429, 1.1826405700534637),
    (200, 0.1_f64, -1, 2100, 1.3858699119427556),
    (200, 0.5_f64, -1, 1636, 1.0611347331505534),
    (200, 1_f64, -1, 1436, 1.0621350211611713),
    (200, 2_f64, -1, 1236, 1.0661456592038792),
    (200, 5.5_f64, -1, 944, 1.1922297771978405),
    (200, 10_f64, -1, 771, 1.8414425715438123),
    (200, 25_f64, -1, 508, 1.3650408983504045),
    (200, 60_f64, -1, 261, 1.2385821275812798),
    (200, 150_f64, -1, 34, 1.7383680201837883),
    (200, 1000_f64, 1, -6, 1.6092472511802312),
    (250, 0.001_f64, -1, 4367, 1.8793357094905012),
    (250, 0.1_f64, -1, 2706, 1.9267773117051414),
    (250, 0.5_f64, -1, 2126, 1.379852212183073),
    (250, 1_f64, -1, 1876, 1.380891651459689),
    (250, 2_f64, -1, 1626, 1.3850572762060922),
    (250, 5.5_f64, -1, 1261, 1.569240473419291),
    (250, 10_f64, -1, 1046, 1.0920251999307118),
    (250, 25_f64, -1, 716, 1.325520563305831),
    (250, 60_f64, -1, 404, 1.992839141169981),
    (250, 150_f64, -1, 103, 1.469572013808663),
    (250, 1000_f64, -1, -8, 1.2266240082118032),
    (300, 0.001_f64, -1, 5321, 1.096285545221782),
    (300, 0.1_f64, -1, 3327, 1.9667025129983555),
    (300, 0.5_f64, -1, 2631, 1.317350993977532),
    (300, 1_f64, -1, 2331, 1.318177352531622),
    (300, 2_f64, -1, 2031, 1.3214879910879782),
    (300, 5.5_f64, -1, 1593, 1.5202870483688715),
    (300, 10_f64, -1, 1334, 1.9179343772588608),
    (300, 25_f64, -1, 938, 1.9931642520847932),
    (300, 60_f64, -1, 563, 1.6188324064359791),
    (300, 150_f64, -1, 190, 1.7799964482386494),
    (300, 1000_f64, 1, -6, 1.6530592205702217),
    (310, 0.001_f64, -1, 5513, 1.2250229348553612),
    (310, 0.1_f64, -1, 3453, 1.6215815738340973),
    (310, 0.5_f64, -1, 2733, 1.866030181161748),
    (310, 1_f64, -1, 2423, 1.86716282649614),
    (310, 2_f64, -1, 2113, 1.8717003093285929),
    (310, 5.5_f64, -1, 1661, 1.4252241311747194),
    (310, 10_f64, -1, 1394, 1.1636920565169269),
    (310, 25_f64, -1, 985, 1.024116594682411),
    (310, 60_f64, -1, 596, 1.9803350399953268),
    (310, 150_f64, -1, 210, 1.0525743852826526),
    (310, 1000_f64, 1, -6, 1.6531020992872518),
    (400, 0.001_f64, -1, 7262, 1.0948990217329502),
    (400, 0.1_f64, -1, 4604, 1.5035063389346919),
    (400, 0.5_f64, -1, 3675, 1.7621172730408863),
    (400, 1_f64, -1, 3275, 1.762945531078403),
    (400, 2_f64, -1, 2875, 1.7662624679674912),
    (400, 5.5_f64, -1, 2292, 1.0510136935927563),
    (400, 10_f64, -1, 1947, 1.0990427800992613),
    (400, 25_f64, -1, 1418, 1.7898659204316687),
    (400, 60_f64, -1, 916, 1.2520890293892446),
    (400, 150_f64, -1, 405, 1.0047668241599772),
    (400, 1000_f64, -1, -7, 1.2248547493186288),
];
pub const BESSEL_I: &[(u32, f64, i32, i64, f64)] = &[
    (0, 0.001_f64, 1, 0, 1.0000002500000156),
    (0, 0.1_f64, 1, 0, 1.0025015629340956),
    (0, 1_f64, 1, 0, 1.2660658777520084),
    (0, 2_f64, 1, 1, 1.1397926511680336),
    (0, 4_f64, 1, 3, 1.4127402440170413),
    (0, 10_f64, 1, 11, 1.3748616349932883),
    (0, 60_f64, 1, 82, 1.2188665673235153),
    (0, 300_f64, 1, 427, 1.291418845144278),
    (1, 0.001_f64, 1, -11, 1.0240001280000053),
    (1, 0.1_f64, 1, -5, 1.6020008335069662),
    (1, 1_f64, 1, -1, 1.13031820798497),
    (1, 2_f64, 1, 0, 1.590636854637329),
    (1, 4_f64, 1, 3, 1.2199331442130563),
    (1, 10_f64, 1, 11, 1.3041935076666282),
    (1, 60_f64, 1, 82, 1.2086662997762772),
    (1, 300_f64, 1, 427, 1.289264680754938),
    (2, 0.001_f64, 1, -23, 1.0485760873813361),
    (2, 0.1_f64, 1, -10, 1.2810670000555613),
    (2, 1_f64, 1, -3, 1.0859813581363063),
    (2, 2_f64, 1, -1, 1.3778968953974764),
    (2, 4_f64, 1, 2, 1.6055473438210264),
    (2, 10_f64, 1, 11, 1.1140229334599627),
    (2, 60_f64, 1, 82, 1.178577690664306),
    (2, 300_f64, 1, 427, 1.2828237472725785),
    (3, 0.001_f64, 1, -36, 1.431655854811821),
    (3, 0.1_f64, 1, -16, 1.3661868800296322),
    (3, 1_f64, 1, -6, 1.4187791951572417),
    (3, 2_f64, 1, -3, 1.7019196739188212),
    (3, 4_f64, 1, 1, 1.668637889210172),
    (3, 10_f64, 1, 10, 1.7171686685652863),
    (3, 60_f64, 1, 82, 1.1300944537319901),
    (3, 300_f64, 1, 427, 1.2721603641246368),
    (5, 0.001_f64, 1, -62, 1.2009599506721291),
    (5, 0.1_f64, 1, -29, 1.3986839795917891),
    (5, 1_f64, 1, -12, 1.1119130867997569),
    (5, 2_f64, 1, -7, 1.257686953360858),
    (5, 4_f64, 1, -1, 1.0094487262263327),
    (5, 10_f64, 1, 9, 1.5179458718813672),
    (5, 60_f64, 1, 81, 1.9760373753863518),
    (5, 300_f64, 1, 427, 1.238630216391568),
    (10, 0.001_f64, 1, -132, 1.4651984413521202),
    (10, 0.1_f64, 1, -66, 1.9861654670928117),
    (10, 1_f64, 1, -32, 1.1823821798686678),
    (10, 2_f64, 1, -22, 1.2654063667016093),
    (10, 4_f64, 1, -12, 1.6539195855951077),
    (10, 10_f64, 1, 4, 1.3682316352327106),
    (10, 60_f64, 1, 81, 1.0540864318991492),
    (10, 300_f64, 1, 427, 1.0928747651112962),
    (25, 0.001_f64, 1, -358, 1.1280877454197962),
    (25, 0.1_f64, 1, -192, 1.206161205998518),
    (25, 1_f64, 1, -109, 1.2590678143995329),
    (25, 2_f64, 1, -84, 1.2958827696290205),
    (25, 4_f64, 1, -59, 1.4537827739469384),
    (25, 10_f64, 1, -25, 1.658937484768803),
    (25, 60_f64, 1, 74, 1.7608575009330696),
    (25, 300_f64, 1, 425, 1.8207243139663534),
    (40, 0.001_f64, 1, -598, 1.1563585476700995),
    (40, 0.1_f64, 1, -333, 1.9506086364068669),
    (40, 1_f64, 1, -200, 1.8021966703526242),
    (40, 2_f64, 1, -160, 1.8354548806231943),
    (40, 4_f64, 1, -120, 1.974582888919111),
    (40, 10_f64, 1, -66, 1.5068210160887976),
    (40, 60_f64, 1, 63, 1.4619136569579911),
    (40, 300_f64, 1, 423, 1.4350104052748975),
    (60, 0.001_f64, 1, -931, 1.8921317607834403),
    (60, 0.1_f64, 1, -532, 1.465550888032141),
    (60, 1_f64, 1, -333, 1.83144467336006),
    (60, 2_f64, 1, -273, 1.8540976678185745),
    (60, 4_f64, 1, -213, 1.9474990499812828),
    (60, 10_f64, 1, -133, 1.7077375951522473),
    (60, 60_f64, 1, 41, 1.510144678398154),
    (60, 300_f64, 1, 418, 1.655313929142539),
    (100, 0.001_f64, 1, -1622, 1.5763394588838548),
    (100, 0.1_f64, 1, -957, 1.0297063220651488),
    (100, 1_f64, 1, -625, 1.1798289329595533),
    (100, 2_f64, 1, -525, 1.188622113015996),
    (100, 4_f64, 1, -425, 1.2244484701277583),
    (100, 10_f64, 1, -293, 1.722479748234496),
    (100, 60_f64, 1, -22, 1.2093340634418288),
    (100, 300_f64, 1, 403, 1.4156616417139953),
    (150, 0.001_f64, 1, -2518, 1.2081930192089616),
    (150, 0.1_f64, 1, -1522, 1.8041300087979757),
    (150, 1_f64, 1, -1023, 1.1041086960009436),
    (150, 2_f64, 1, -873, 1.109606171263802),
    (150, 4_f64, 1, -723, 1.1318693272939018),
    (150, 10_f64, 1, -525, 1.5893477077859033),
    (150, 60_f64, 1, -129, 1.5289149927671903),
    (150, 300_f64, 1, 374, 1.1794050650715193),
    (200, 0.001_f64, 1, -3439, 1.3780574272551809),
    (200, 0.1_f64, 1, -2110, 1.1760031359434893),
    (200, 1_f64, 1, -1446, 1.538247163336236),
    (200, 2_f64, 1, -1246, 1.5439975246564326),
    (200, 4_f64, 1, -1046, 1.5672136582184044),
    (200, 10_f64, 1, -781, 1.1364202162429324),
    (200, 60_f64, 1, -258, 1.3084582912215015),
    (200, 300_f64, 1, 334, 1.1645718892423291),
    (250, 0.001_f64, 1, -4378, 1.3875086711036952),
    (250, 0.1_f64, 1, -2717, 1.3533721437469461),
    (250, 1_f64, 1, -1887, 1.8921217146018363),
    (250, 2_f64, 1, -1637, 1.8977838639711342),
    (250, 4_f64, 1, -1387, 1.9206017279279195),
    (250, 10_f64, 1, -1056, 1.4582701572165808),
    (250, 60_f64, 1, -405, 1.714872947594419),
    (250, 300_f64, 1, 284, 1.1440595105031908),
    (300, 0.001_f64, 1, -5332, 1.982143705874951),
    (300, 0.1_f64, 1, -3338, 1.1049112372690029),
    (300, 1_f64, 1, -2342, 1.6512347179631235),
    (300, 2_f64, 1, -2042, 1.6553541919643484),
    (300, 4_f64, 1, -1742, 1.6719347729711758),
    (300, 10_f64, 1, -1345, 1.3384693697565582),
    (300, 60_f64, 1, -565, 1.0585967507808054),
    (300, 300_f64, 1, 224, 1.9020960050470346),
    (310, 0.001_f64, 1, -5524, 1.716619995055067),
    (310, 0.1_f64, 1, -3464, 1.2968405742054567),
    (310, 1_f64, 1, -2434, 1.1280716259068957),
    (310, 2_f64, 1, -2124, 1.13079532120776),
    (310, 4_f64, 1, -1814, 1.1417558113875463),
    (310, 10_f64, 1, -1404, 1.0616922986060897),
    (310, 60_f64, 1, -599, 1.3799899721571263),
    (310, 300_f64, 1, 212, 1.0216786688059412),
    (400, 0.001_f64, 1, -7273, 1.4884903419848934),
    (400, 0.1_f64, 1, -4615, 1.0839774646398541),
    (400, 1_f64, 1, -3287, 1.8512030670272381),
    (400, 2_f64, 1, -2887, 1.8546686433321755),
    (400, 4_f64, 1, -2487, 1.8685957854403903),
    (400, 10_f64, 1, -1958, 1.6803226576532895),
    (400, 60_f64, 1, -921, 1.8312115062242729),
    (400, 300_f64, 1, 81, 1.4680037141112465),
];
// J_m(x) * Y_m(x)
pub const JY_PRODUCTS: &[(u32, f64, f64)] = &[
    (200, 5_f64, -0.0015920470358382099),
    (300, 5.5_f64, -0.0010612113133744768),
    (150, 2_f64, -0.002122254569516212),
];
