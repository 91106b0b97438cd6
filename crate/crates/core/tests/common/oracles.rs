// Generated by tools/oracles.py from mpmath; do not edit by hand.
#![allow(dead_code, clippy::approx_constant, clippy::excessive_precision)]

/// (x, Γ(x))
pub const GAMMA: &[(f64, f64)] = &[
    (-169.5000000000000000, 5.648220884223325472e-306),
    (-50.29999999999999716, -3.933159831930715429e-65),
    (-10.69999999999999929, -2.016385504788362349e-7),
    (-2.500000000000000000, -0.9453087204829418812),
    (-0.5000000000000000000, -3.544907701811032055),
    (-0.001000000000000000021, -1000.578205629358627),
    (0.001000000000000000021, 999.4237724845954453),
    (0.1000000000000000056, 9.513507698668731286),
    (0.5000000000000000000, 1.772453850905516027),
    (1.300000000000000044, 0.8974706963062771818),
    (2.700000000000000178, 1.544685845850593984),
    (7.500000000000000000, 1871.254305797788346),
    (20.19999999999999929, 220574282641236389.9),
    (55.50000000000000000, 1.708096280799410638e+72),
    (100.0999999999999943, 1.478454494651475011e+156),
    (169.9000000000000057, 2.555223269296777093e+304),
];
/// (x, ψ(x))
pub const DIGAMMA: &[(f64, f64)] = &[
    (0.001000000000000000021, -1000.575571931810280),
    (0.1000000000000000056, -10.42375494041107623),
    (0.5000000000000000000, -1.963510026021423479),
    (1.500000000000000000, 0.03648997397857652056),
    (3.700000000000000178, 1.167153539361511441),
    (10.50000000000000000, 2.303001034297686375),
    (50.00000000000000000, 3.901989673427892197),
    (169.0000000000000000, 5.126937217319993572),
];
/// (x, erf(x))
pub const ERF: &[(f64, f64)] = &[
    (-2.000000000000000000, -0.9953222650189527342),
    (0.1000000000000000056, 0.1124629160182848984),
    (0.5000000000000000000, 0.5204998778130465377),
    (1.000000000000000000, 0.8427007929497148693),
    (2.000000000000000000, 0.9953222650189527342),
    (3.000000000000000000, 0.9999779095030014146),
    (5.000000000000000000, 0.9999999999984625402),
];
/// (order, x, K_order(x))
pub const BESSEL_K: &[(f64, f64, f64)] = &[
    (0.0, 0.001000000000000000021, 7.023688800562381323),
    (0.0, 0.1000000000000000056, 2.427069024702016558),
    (0.0, 1.000000000000000000, 0.4210244382407083333),
    (0.0, 2.000000000000000000, 0.1138938727495334357),
    (0.0, 10.00000000000000000, 0.00001778006231616765181),
    (0.0, 50.00000000000000000, 3.410167749789495514e-23),
    (0.3333333333333333148, 0.001000000000000000021, 16.71504693651745835),
    (0.3333333333333333148, 0.1000000000000000056, 2.899827980934577110),
    (0.3333333333333333148, 1.000000000000000000, 0.4384306334415343597),
    (0.3333333333333333148, 2.000000000000000000, 0.1165449612961652485),
    (0.3333333333333333148, 10.00000000000000000, 0.00001787460827105533487),
    (0.3333333333333333148, 50.00000000000000000, 3.413921781358362798e-23),
    (0.5000000000000000000, 0.001000000000000000021, 39.59365951311664320),
    (0.5000000000000000000, 0.1000000000000000056, 3.586166838797260025),
    (0.5000000000000000000, 1.000000000000000000, 0.4610685044478945584),
    (0.5000000000000000000, 2.000000000000000000, 0.1199377719680614474),
    (0.5000000000000000000, 10.00000000000000000, 0.00001799347809370517961),
    (0.5000000000000000000, 50.00000000000000000, 3.418620095457074636e-23),
    (0.7500000000000000000, 0.001000000000000000021, 183.2346385217582164),
    (0.7500000000000000000, 0.1000000000000000056, 5.596702511268131554),
    (0.7500000000000000000, 1.000000000000000000, 0.5157753006959186286),
    (0.7500000000000000000, 2.000000000000000000, 0.1279029786291790263),
    (0.7500000000000000000, 10.00000000000000000, 0.00001826375143670531279),
    (0.7500000000000000000, 50.00000000000000000, 3.429214804693557442e-23),
    (1.000000000000000000, 0.001000000000000000021, 999.9962381560855535),
    (1.000000000000000000, 0.1000000000000000056, 9.853844780870605574),
    (1.000000000000000000, 1.000000000000000000, 0.6019072301972345747),
    (1.000000000000000000, 2.000000000000000000, 0.1398658818165224273),
    (1.000000000000000000, 10.00000000000000000, 0.00001864877345382558460),
    (1.000000000000000000, 50.00000000000000000, 3.444102226717555613e-23),
];
/// (λ, μ, z, W_{λ,μ}(z))
pub const WRIGHT: &[(f64, f64, f64, f64)] = &[
    (1.000000000000000000, 1.000000000000000000, 0.0, 1.000000000000000000),
    (0.0, 1.000000000000000000, 1.000000000000000000, 2.718281828459045235),
    (-0.5000000000000000000, 0.5000000000000000000, -1.000000000000000000, 0.4393912894677223970),
    (0.5000000000000000000, 1.000000000000000000, 2.000000000000000000, 6.690627940507144136),
    (0.2999999999999999889, 0.6999999999999999556, -3.000000000000000000, -0.01859426962121825887),
    (-0.2500000000000000000, 0.7500000000000000000, -2.000000000000000000, 0.1612510834545858559),
    (-0.6999999999999999556, 0.2999999999999999889, -1.500000000000000000, 0.4724238117792288416),
    (-0.4000000000000000222, 0.0, -0.8000000000000000444, 0.1486262150376321763),
    (1.500000000000000000, -0.5000000000000000000, 4.000000000000000000, 11.72975639134139741),
];
/// (ν, t, M_ν(t)) from 200+ term high-precision summation
pub const MAINARDI_M: &[(f64, f64, f64)] = &[
    (0.2500000000000000000, 2.000000000000000000, 0.1612510834545858559),
    (0.1000000000000000056, 1.000000000000000000, 0.3702904627514908493),
    (0.5000000000000000000, 3.000000000000000000, 0.05946514461181468577),
    (0.7500000000000000000, 1.500000000000000000, 0.5487378622264563337),
    (0.3333333333333333148, 0.5000000000000000000, 0.5563338386752553523),
];
/// (α, β, z, E_{α,β}(z))
pub const MITTAG_LEFFLER: &[(f64, f64, f64, f64)] = &[
    (1.000000000000000000, 1.000000000000000000, 1.000000000000000000, 2.718281828459045235),
    (0.5000000000000000000, 1.000000000000000000, 0.5000000000000000000, 1.952360489182557093),
    (0.5000000000000000000, 1.500000000000000000, 0.5000000000000000000, 1.904720978365114187),
    (0.5000000000000000000, 0.5000000000000000000, -1.199999999999999956, 0.1099446832326686258),
    (0.8000000000000000444, 1.000000000000000000, -5.000000000000000000, 0.05759538476215224426),
    (1.199999999999999956, 0.5999999999999999778, 3.000000000000000000, 14.67864370400250777),
    (0.4000000000000000222, 1.000000000000000000, -10.00000000000000000, -3.669851027908694650e+75),
    (0.9000000000000000222, 1.100000000000000089, 20.00000000000000000, 1041327287538.617488),
    (2.000000000000000000, 1.000000000000000000, -30.00000000000000000, 0.6924191115937478400),
];
/// (t, ν(t))
pub const VOLTERRA_NU: &[(f64, f64)] = &[
    (0.05000000000000000278, 0.3558049763161568494),
    (0.1000000000000000056, 0.4569931608746123812),
    (0.5000000000000000000, 1.134461738729992129),
    (1.000000000000000000, 2.266534507699848835),
    (2.000000000000000000, 6.997579629175669216),
    (5.000000000000000000, 148.0923695892371095),
    (50.00000000000000000, 5.184705528587072464e+21),
];
/// (t, α, ν(t, α))
pub const VOLTERRA_NU_ALPHA: &[(f64, f64, f64)] = &[
    (1.000000000000000000, 1.000000000000000000, 1.181391843342378751),
    (0.5000000000000000000, 2.000000000000000000, 0.06978552355324063563),
    (2.000000000000000000, 0.5000000000000000000, 6.343944188495215730),
    (5.000000000000000000, 1.500000000000000000, 142.0918744439801134),
];
/// (t, β, α, μ(t, β, α))
pub const VOLTERRA_MU: &[(f64, f64, f64, f64)] = &[
    (1.000000000000000000, 1.000000000000000000, 1.000000000000000000, 1.085142664357470084),
    (2.000000000000000000, 1.000000000000000000, 0.5999999999999999778, 10.88758842689276133),
    (0.5000000000000000000, 2.000000000000000000, 0.0, 0.6199607579604276729),
    (3.000000000000000000, 0.5000000000000000000, 1.000000000000000000, 28.68046193916718874),
];
/// (ν, μ, t, f_{ν,μ}(t)) by high-precision Wright summation
pub const KERNEL: &[(f64, f64, f64, f64)] = &[
    (0.1000000000000000056, -1.500000000000000000, 0.1000000000000000056, 33.89400409822597376),
    (0.1000000000000000056, -1.500000000000000000, 0.5000000000000000000, 0.7520289365301758303),
    (0.1000000000000000056, -1.500000000000000000, 1.000000000000000000, 0.1442294609282990002),
    (0.1000000000000000056, -1.500000000000000000, 2.000000000000000000, 0.02749604379501498266),
    (0.1000000000000000056, -1.500000000000000000, 5.000000000000000000, 0.003048751674918632368),
    (0.1000000000000000056, -1.500000000000000000, 50.00000000000000000, 0.00001169838422153946774),
    (0.1000000000000000056, -0.5000000000000000000, 0.1000000000000000056, -2.483523693548465648),
    (0.1000000000000000056, -0.5000000000000000000, 0.5000000000000000000, -0.2711375697313242898),
    (0.1000000000000000056, -0.5000000000000000000, 1.000000000000000000, -0.1033855952056868330),
    (0.1000000000000000056, -0.5000000000000000000, 2.000000000000000000, -0.03920511784709665415),
    (0.1000000000000000056, -0.5000000000000000000, 5.000000000000000000, -0.01079706463650563054),
    (0.1000000000000000056, -0.5000000000000000000, 50.00000000000000000, -0.0004087322366767266291),
    (0.1000000000000000056, 0.0, 0.1000000000000000056, 0.3656431475549910841),
    (0.1000000000000000056, 0.0, 0.5000000000000000000, 0.07421366633562631335),
    (0.1000000000000000056, 0.0, 1.000000000000000000, 0.03702904627514908639),
    (0.1000000000000000056, 0.0, 2.000000000000000000, 0.01839129232507272645),
    (0.1000000000000000056, 0.0, 5.000000000000000000, 0.007244658718021163907),
    (0.1000000000000000056, 0.0, 50.00000000000000000, 0.0006774531254693969675),
    (0.1000000000000000056, 0.2999999999999999889, 0.1000000000000000056, 0.6867658892494921463),
    (0.1000000000000000056, 0.2999999999999999889, 0.5000000000000000000, 0.2561106385109507564),
    (0.1000000000000000056, 0.2999999999999999889, 1.000000000000000000, 0.1662631921044361805),
    (0.1000000000000000056, 0.2999999999999999889, 2.000000000000000000, 0.1075177154219078402),
    (0.1000000000000000056, 0.2999999999999999889, 5.000000000000000000, 0.06009627061427523139),
    (0.1000000000000000056, 0.2999999999999999889, 50.00000000000000000, 0.01360481767496517109),
    (0.1000000000000000056, 0.5000000000000000000, 0.1000000000000000056, 0.6315586451847098721),
    (0.1000000000000000056, 0.5000000000000000000, 0.5000000000000000000, 0.3308277349015201813),
    (0.1000000000000000056, 0.5000000000000000000, 1.000000000000000000, 0.2484764030822923699),
    (0.1000000000000000056, 0.5000000000000000000, 2.000000000000000000, 0.1858416564398836509),
    (0.1000000000000000056, 0.5000000000000000000, 5.000000000000000000, 0.1258378317216202127),
    (0.1000000000000000056, 0.5000000000000000000, 50.00000000000000000, 0.04602324157985759475),
    (0.1000000000000000056, 0.9000000000000000222, 0.1000000000000000056, 0.3656431475549910662),
    (0.1000000000000000056, 0.9000000000000000222, 0.5000000000000000000, 0.3710683316781315448),
    (0.1000000000000000056, 0.9000000000000000222, 1.000000000000000000, 0.3702904627514908493),
    (0.1000000000000000056, 0.9000000000000000222, 2.000000000000000000, 0.3678258465014545217),
    (0.1000000000000000056, 0.9000000000000000222, 5.000000000000000000, 0.3622329359010581975),
    (0.1000000000000000056, 0.9000000000000000222, 50.00000000000000000, 0.3387265627346985076),
    (0.2000000000000000111, -1.500000000000000000, 0.1000000000000000056, 15.07276714818146649),
    (0.2000000000000000111, -1.500000000000000000, 0.5000000000000000000, 0.5870660669604340601),
    (0.2000000000000000111, -1.500000000000000000, 1.000000000000000000, 0.1299026908049248274),
    (0.2000000000000000111, -1.500000000000000000, 2.000000000000000000, 0.02757619859127970799),
    (0.2000000000000000111, -1.500000000000000000, 5.000000000000000000, 0.003387670108131666780),
    (0.2000000000000000111, -1.500000000000000000, 50.00000000000000000, 0.00001484231006503690720),
    (0.2000000000000000111, -0.5000000000000000000, 0.1000000000000000056, -1.482807398914325411),
    (0.2000000000000000111, -0.5000000000000000000, 0.5000000000000000000, -0.2427331629253363412),
    (0.2000000000000000111, -0.5000000000000000000, 1.000000000000000000, -0.1030553393409823933),
    (0.2000000000000000111, -0.5000000000000000000, 2.000000000000000000, -0.04239368006734910266),
    (0.2000000000000000111, -0.5000000000000000000, 5.000000000000000000, -0.01261652239637162731),
    (0.2000000000000000111, -0.5000000000000000000, 50.00000000000000000, -0.0005264845397400561770),
    (0.2000000000000000111, 0.0, 0.1000000000000000056, 0.7161721391734914639),
    (0.2000000000000000111, 0.0, 0.5000000000000000000, 0.1526029200540984539),
    (0.2000000000000000111, 0.0, 1.000000000000000000, 0.07552957965157838340),
    (0.2000000000000000111, 0.0, 2.000000000000000000, 0.03672060021056736249),
    (0.2000000000000000111, 0.0, 5.000000000000000000, 0.01383081205175997795),
    (0.2000000000000000111, 0.0, 50.00000000000000000, 0.001089388150085641350),
    (0.2000000000000000111, 0.2999999999999999889, 0.1000000000000000056, 0.7341012062329260636),
    (0.2000000000000000111, 0.2999999999999999889, 0.5000000000000000000, 0.3139725802232522252),
    (0.2000000000000000111, 0.2999999999999999889, 1.000000000000000000, 0.2109398242864857199),
    (0.2000000000000000111, 0.2999999999999999889, 2.000000000000000000, 0.1396616721510225833),
    (0.2000000000000000111, 0.2999999999999999889, 5.000000000000000000, 0.07950982340365788244),
    (0.2000000000000000111, 0.2999999999999999889, 50.00000000000000000, 0.01808418896209128795),
    (0.2000000000000000111, 0.5000000000000000000, 0.1000000000000000056, 0.5902019622760355405),
    (0.2000000000000000111, 0.5000000000000000000, 0.5000000000000000000, 0.3683221950146372383),
    (0.2000000000000000111, 0.5000000000000000000, 1.000000000000000000, 0.2904866083965590793),
    (0.2000000000000000111, 0.5000000000000000000, 2.000000000000000000, 0.2254393891298054470),
    (0.2000000000000000111, 0.5000000000000000000, 5.000000000000000000, 0.1579691533251794279),
    (0.2000000000000000111, 0.5000000000000000000, 50.00000000000000000, 0.05988212955884213328),
    (0.2000000000000000111, 0.9000000000000000222, 0.1000000000000000056, 0.2935033454131362204),
    (0.2000000000000000111, 0.9000000000000000222, 0.5000000000000000000, 0.3721221030475804192),
    (0.2000000000000000111, 0.9000000000000000222, 1.000000000000000000, 0.3966672137279925383),
    (0.2000000000000000111, 0.9000000000000000222, 2.000000000000000000, 0.4151416904999443138),
    (0.2000000000000000111, 0.9000000000000000222, 5.000000000000000000, 0.4305385659299840498),
    (0.2000000000000000111, 0.9000000000000000222, 50.00000000000000000, 0.4310029336979495539),
    (0.2500000000000000000, -1.500000000000000000, 0.1000000000000000056, 3.334186289668751055),
    (0.2500000000000000000, -1.500000000000000000, 0.5000000000000000000, 0.4758681066909967747),
    (0.2500000000000000000, -1.500000000000000000, 1.000000000000000000, 0.1206952787435316733),
    (0.2500000000000000000, -1.500000000000000000, 2.000000000000000000, 0.02774571988709688995),
    (0.2500000000000000000, -1.500000000000000000, 5.000000000000000000, 0.003612205970695300889),
    (0.2500000000000000000, -1.500000000000000000, 50.00000000000000000, 0.00001647681794477186126),
    (0.2500000000000000000, -0.5000000000000000000, 0.1000000000000000056, -0.8328255111429166053),
    (0.2500000000000000000, -0.5000000000000000000, 0.5000000000000000000, -0.2240007623295138341),
    (0.2500000000000000000, -0.5000000000000000000, 1.000000000000000000, -0.1030310894601034942),
    (0.2500000000000000000, -0.5000000000000000000, 2.000000000000000000, -0.04449211921237687728),
    (0.2500000000000000000, -0.5000000000000000000, 5.000000000000000000, -0.01371520873166633746),
    (0.2500000000000000000, -0.5000000000000000000, 50.00000000000000000, -0.0005833140791332270279),
    (0.2500000000000000000, 0.0, 0.1000000000000000056, 0.8759530873136360221),
    (0.2500000000000000000, 0.0, 0.5000000000000000000, 0.1949940582982891972),
    (0.2500000000000000000, 0.0, 1.000000000000000000, 0.09583385414267088394),
    (0.2500000000000000000, 0.0, 2.000000000000000000, 0.04580545762572084454),
    (0.2500000000000000000, 0.0, 5.000000000000000000, 0.01668559622813061144),
    (0.2500000000000000000, 0.0, 50.00000000000000000, 0.001171859585743694608),
    (0.2500000000000000000, 0.2999999999999999889, 0.1000000000000000056, 0.7391632195943570222),
    (0.2500000000000000000, 0.2999999999999999889, 0.5000000000000000000, 0.3440951214972471121),
    (0.2500000000000000000, 0.2999999999999999889, 1.000000000000000000, 0.2342982200922696788),
    (0.2500000000000000000, 0.2999999999999999889, 2.000000000000000000, 0.1559352079489841232),
    (0.2500000000000000000, 0.2999999999999999889, 5.000000000000000000, 0.08865560208066242462),
    (0.2500000000000000000, 0.2999999999999999889, 50.00000000000000000, 0.01973084207565068839),
    (0.2500000000000000000, 0.5000000000000000000, 0.1000000000000000056, 0.5567758535135226233),
    (0.2500000000000000000, 0.5000000000000000000, 0.5000000000000000000, 0.3872558922442585189),
    (0.2500000000000000000, 0.5000000000000000000, 1.000000000000000000, 0.3123047691349816504),
    (0.2500000000000000000, 0.5000000000000000000, 2.000000000000000000, 0.2455853280237758420),
    (0.2500000000000000000, 0.5000000000000000000, 5.000000000000000000, 0.1734234632749918331),
    (0.2500000000000000000, 0.5000000000000000000, 50.00000000000000000, 0.06534408070577964906),
    (0.2500000000000000000, 0.9000000000000000222, 0.1000000000000000056, 0.2543075679436480038),
    (0.2500000000000000000, 0.9000000000000000222, 0.5000000000000000000, 0.3718875253436876774),
    (0.2500000000000000000, 0.9000000000000000222, 1.000000000000000000, 0.4101285006979692614),
    (0.2500000000000000000, 0.9000000000000000222, 2.000000000000000000, 0.4392847339134654918),
    (0.2500000000000000000, 0.9000000000000000222, 5.000000000000000000, 0.4640878027049139401),
    (0.2500000000000000000, 0.9000000000000000222, 50.00000000000000000, 0.4697218536403331207),
    (0.3333333333333333148, -1.500000000000000000, 0.1000000000000000056, -19.10972063062542287),
    (0.3333333333333333148, -1.500000000000000000, 0.5000000000000000000, 0.2146027681158194574),
    (0.3333333333333333148, -1.500000000000000000, 1.000000000000000000, 0.1005870396103331045),
    (0.3333333333333333148, -1.500000000000000000, 2.000000000000000000, 0.02847595821428265117),
    (0.3333333333333333148, -1.500000000000000000, 5.000000000000000000, 0.004110781930702102665),
    (0.3333333333333333148, -1.500000000000000000, 50.00000000000000000, 0.00001913305796967728304),
    (0.3333333333333333148, -0.5000000000000000000, 0.1000000000000000056, 0.5537316238861327243),
    (0.3333333333333333148, -0.5000000000000000000, 0.5000000000000000000, -0.1812754318774927910),
    (0.3333333333333333148, -0.5000000000000000000, 1.000000000000000000, -0.1035271388258521625),
    (0.3333333333333333148, -0.5000000000000000000, 2.000000000000000000, -0.04917520100521649036),
    (0.3333333333333333148, -0.5000000000000000000, 5.000000000000000000, -0.01589371237917729026),
    (0.3333333333333333148, -0.5000000000000000000, 50.00000000000000000, -0.0006687971895270114004),
    (0.3333333333333333148, 0.0, 0.1000000000000000056, 1.080842851143014652),
    (0.3333333333333333148, 0.0, 0.5000000000000000000, 0.2734286896607666290),
    (0.3333333333333333148, 0.0, 1.000000000000000000, 0.1320798265688341884),
    (0.3333333333333333148, 0.0, 2.000000000000000000, 0.06067977583896109801),
    (0.3333333333333333148, 0.0, 5.000000000000000000, 0.02055390941204895779),
    (0.3333333333333333148, 0.0, 50.00000000000000000, 0.001154402299814751072),
    (0.3333333333333333148, 0.2999999999999999889, 0.1000000000000000056, 0.6977739933995673328),
    (0.3333333333333333148, 0.2999999999999999889, 0.5000000000000000000, 0.3971442139267310009),
    (0.3333333333333333148, 0.2999999999999999889, 1.000000000000000000, 0.2756050216748959875),
    (0.3333333333333333148, 0.2999999999999999889, 2.000000000000000000, 0.1834329875300134025),
    (0.3333333333333333148, 0.2999999999999999889, 5.000000000000000000, 0.1027260483403033576),
    (0.3333333333333333148, 0.2999999999999999889, 50.00000000000000000, 0.02162613599631485055),
    (0.3333333333333333148, 0.5000000000000000000, 0.1000000000000000056, 0.4703300562622463115),
    (0.3333333333333333148, 0.5000000000000000000, 0.5000000000000000000, 0.4192372516781697686),
    (0.3333333333333333148, 0.5000000000000000000, 1.000000000000000000, 0.3505810341702900538),
    (0.3333333333333333148, 0.5000000000000000000, 2.000000000000000000, 0.2798783153242143121),
    (0.3333333333333333148, 0.5000000000000000000, 5.000000000000000000, 0.1978821600008276310),
    (0.3333333333333333148, 0.5000000000000000000, 50.00000000000000000, 0.07225069584177014709),
    (0.3333333333333333148, 0.9000000000000000222, 0.1000000000000000056, 0.1829696577605142523),
    (0.3333333333333333148, 0.9000000000000000222, 0.5000000000000000000, 0.3696960202004726664),
    (0.3333333333333333148, 0.9000000000000000222, 1.000000000000000000, 0.4332357795918103438),
    (0.3333333333333333148, 0.9000000000000000222, 2.000000000000000000, 0.4805841434629536631),
    (0.3333333333333333148, 0.9000000000000000222, 5.000000000000000000, 0.5186798328676323214),
    (0.3333333333333333148, 0.9000000000000000222, 50.00000000000000000, 0.5225245801133806806),
    (0.4000000000000000222, -1.500000000000000000, 0.1000000000000000056, -33.45326777971293802),
    (0.4000000000000000222, -1.500000000000000000, 0.5000000000000000000, -0.1078205255972165588),
    (0.4000000000000000222, -1.500000000000000000, 1.000000000000000000, 0.07824159271274545947),
    (0.4000000000000000222, -1.500000000000000000, 2.000000000000000000, 0.02981320213489239878),
    (0.4000000000000000222, -1.500000000000000000, 5.000000000000000000, 0.004656298459364481621),
    (0.4000000000000000222, -1.500000000000000000, 50.00000000000000000, 0.00002105029293376386706),
    (0.4000000000000000222, -0.5000000000000000000, 0.1000000000000000056, 1.869193631502510033),
    (0.4000000000000000222, -0.5000000000000000000, 0.5000000000000000000, -0.1304011960778943778),
    (0.4000000000000000222, -0.5000000000000000000, 1.000000000000000000, -0.1048311322411109602),
    (0.4000000000000000222, -0.5000000000000000000, 2.000000000000000000, -0.05442394767223554753),
    (0.4000000000000000222, -0.5000000000000000000, 5.000000000000000000, -0.01796982986260293127),
    (0.4000000000000000222, -0.5000000000000000000, 50.00000000000000000, -0.0007250982249938528843),
    (0.4000000000000000222, 0.0, 0.1000000000000000056, 1.120296243677556116),
    (0.4000000000000000222, 0.0, 0.5000000000000000000, 0.3465051490521787192),
    (0.4000000000000000222, 0.0, 1.000000000000000000, 0.1640934376175307372),
    (0.4000000000000000222, 0.0, 2.000000000000000000, 0.07215173347323668956),
    (0.4000000000000000222, 0.0, 5.000000000000000000, 0.02268470856495934182),
    (0.4000000000000000222, 0.0, 50.00000000000000000, 0.001041634846311653654),
    (0.4000000000000000222, 0.2999999999999999889, 0.1000000000000000056, 0.5942519113672344864),
    (0.4000000000000000222, 0.2999999999999999889, 0.5000000000000000000, 0.4431410778186906170),
    (0.4000000000000000222, 0.2999999999999999889, 1.000000000000000000, 0.3116657210879308316),
    (0.4000000000000000222, 0.2999999999999999889, 2.000000000000000000, 0.2057958803583209557),
    (0.4000000000000000222, 0.2999999999999999889, 5.000000000000000000, 0.1126714098599905797),
    (0.4000000000000000222, 0.2999999999999999889, 50.00000000000000000, 0.02249579531800151947),
    (0.4000000000000000222, 0.5000000000000000000, 0.1000000000000000056, 0.3637029593033593542),
    (0.4000000000000000222, 0.5000000000000000000, 0.5000000000000000000, 0.4452031117561102444),
    (0.4000000000000000222, 0.5000000000000000000, 1.000000000000000000, 0.3836389169611874298),
    (0.4000000000000000222, 0.5000000000000000000, 2.000000000000000000, 0.3081078624551171413),
    (0.4000000000000000222, 0.5000000000000000000, 5.000000000000000000, 0.2159730232420522949),
    (0.4000000000000000222, 0.5000000000000000000, 50.00000000000000000, 0.07601638721659961257),
    (0.4000000000000000222, 0.9000000000000000222, 0.1000000000000000056, 0.1214437522088244828),
    (0.4000000000000000222, 0.9000000000000000222, 0.5000000000000000000, 0.3655532370110379161),
    (0.4000000000000000222, 0.9000000000000000222, 1.000000000000000000, 0.4525956801402699703),
    (0.4000000000000000222, 0.9000000000000000222, 2.000000000000000000, 0.5148750187466382835),
    (0.4000000000000000222, 0.9000000000000000222, 5.000000000000000000, 0.5608017696050003498),
    (0.4000000000000000222, 0.9000000000000000222, 50.00000000000000000, 0.5548054771461168652),
    (0.5000000000000000000, -1.500000000000000000, 0.1000000000000000056, -7.322491280963247621),
    (0.5000000000000000000, -1.500000000000000000, 0.5000000000000000000, -0.9678828980765733992),
    (0.5000000000000000000, -1.500000000000000000, 1.000000000000000000, 0.02746195559173264982),
    (0.5000000000000000000, -1.500000000000000000, 2.000000000000000000, 0.03438137956682612088),
    (0.5000000000000000000, -1.500000000000000000, 5.000000000000000000, 0.005784187731433255423),
    (0.5000000000000000000, -1.500000000000000000, 50.00000000000000000, 0.00002334160369674324584),
    (0.5000000000000000000, -0.5000000000000000000, 0.1000000000000000056, 2.928996512385297382),
    (0.5000000000000000000, -0.5000000000000000000, 0.5000000000000000000, -1.175169208180739403e-41),
    (0.5000000000000000000, -0.5000000000000000000, 1.000000000000000000, -0.1098478223669305993),
    (0.5000000000000000000, -0.5000000000000000000, 2.000000000000000000, -0.06601224876830615208),
    (0.5000000000000000000, -0.5000000000000000000, 5.000000000000000000, -0.02160070107174244764),
    (0.5000000000000000000, -0.5000000000000000000, 50.00000000000000000, -0.0007859660440044832957),
    (0.5000000000000000000, 0.0, 0.1000000000000000056, 0.7322491280963243963),
    (0.5000000000000000000, 0.0, 0.5000000000000000000, 0.4839414490382866996),
    (0.5000000000000000000, 0.0, 1.000000000000000000, 0.2196956447338611985),
    (0.5000000000000000000, 0.0, 2.000000000000000000, 0.08801633169107486944),
    (0.5000000000000000000, 0.0, 5.000000000000000000, 0.02400077896860271960),
    (0.5000000000000000000, 0.0, 50.00000000000000000, 0.0007939050949540235310),
    (0.5000000000000000000, 0.2999999999999999889, 0.1000000000000000056, 0.2845221024885458962),
    (0.5000000000000000000, 0.2999999999999999889, 0.5000000000000000000, 0.5203382397068320056),
    (0.5000000000000000000, 0.2999999999999999889, 1.000000000000000000, 0.3733909109612735499),
    (0.5000000000000000000, 0.2999999999999999889, 2.000000000000000000, 0.2398924012382758416),
    (0.5000000000000000000, 0.2999999999999999889, 5.000000000000000000, 0.1249020853828018956),
    (0.5000000000000000000, 0.2999999999999999889, 50.00000000000000000, 0.02303233542388108605),
    (0.5000000000000000000, 0.5000000000000000000, 0.1000000000000000056, 0.1464498256192648874),
    (0.5000000000000000000, 0.5000000000000000000, 0.5000000000000000000, 0.4839414490382866996),
    (0.5000000000000000000, 0.5000000000000000000, 1.000000000000000000, 0.4393912894677223970),
    (0.5000000000000000000, 0.5000000000000000000, 2.000000000000000000, 0.3520653267642994778),
    (0.5000000000000000000, 0.5000000000000000000, 5.000000000000000000, 0.2400077896860271960),
    (0.5000000000000000000, 0.5000000000000000000, 50.00000000000000000, 0.07939050949540235310),
    (0.5000000000000000000, 0.9000000000000000222, 0.1000000000000000056, 0.03634012423213038329),
    (0.5000000000000000000, 0.9000000000000000222, 0.5000000000000000000, 0.3526564834009224563),
    (0.5000000000000000000, 0.9000000000000000222, 1.000000000000000000, 0.4838586124255344648),
    (0.5000000000000000000, 0.9000000000000000222, 2.000000000000000000, 0.5691126816883452085),
    (0.5000000000000000000, 0.9000000000000000222, 5.000000000000000000, 0.6205791071691431122),
    (0.5000000000000000000, 0.9000000000000000222, 50.00000000000000000, 0.5891538766763873842),
    (0.5999999999999999778, -1.500000000000000000, 0.1000000000000000056, 26.46673901435378356),
    (0.5999999999999999778, -1.500000000000000000, 0.5000000000000000000, -2.872991634881463754),
    (0.5999999999999999778, -1.500000000000000000, 1.000000000000000000, -0.06165629751700040943),
    (0.5999999999999999778, -1.500000000000000000, 2.000000000000000000, 0.04533955699948331453),
    (0.5999999999999999778, -1.500000000000000000, 5.000000000000000000, 0.007326190827631382646),
    (0.5999999999999999778, -1.500000000000000000, 50.00000000000000000, 0.00002480979730662575033),
    (0.5999999999999999778, -0.5000000000000000000, 0.1000000000000000056, 0.4625253971054373125),
    (0.5999999999999999778, -0.5000000000000000000, 0.5000000000000000000, 0.2813715763917611431),
    (0.5999999999999999778, -0.5000000000000000000, 1.000000000000000000, -0.1226875413442815758),
    (0.5999999999999999778, -0.5000000000000000000, 2.000000000000000000, -0.08428874772496852045),
    (0.5999999999999999778, -0.5000000000000000000, 5.000000000000000000, -0.02565294807745556033),
    (0.5999999999999999778, -0.5000000000000000000, 50.00000000000000000, -0.0008203041303909443621),
    (0.5999999999999999778, 0.0, 0.1000000000000000056, 0.05257555666437352473),
    (0.5999999999999999778, 0.0, 0.5000000000000000000, 0.6780158893348951604),
    (0.5999999999999999778, 0.0, 1.000000000000000000, 0.2899412600088370945),
    (0.5999999999999999778, 0.0, 2.000000000000000000, 0.1008490510884184974),
    (0.5999999999999999778, 0.0, 5.000000000000000000, 0.02285391116069169236),
    (0.5999999999999999778, 0.0, 50.00000000000000000, 0.0005352530742066501603),
    (0.5999999999999999778, 0.2999999999999999889, 0.1000000000000000056, 0.01376784991034003029),
    (0.5999999999999999778, 0.2999999999999999889, 0.5000000000000000000, 0.6085982909812560974),
    (0.5999999999999999778, 0.2999999999999999889, 1.000000000000000000, 0.4498541353983761686),
    (0.5999999999999999778, 0.2999999999999999889, 2.000000000000000000, 0.2742660065181604295),
    (0.5999999999999999778, 0.2999999999999999889, 5.000000000000000000, 0.1333501985794233570),
    (0.5999999999999999778, 0.2999999999999999889, 50.00000000000000000, 0.02301575317871024297),
    (0.5999999999999999778, 0.5000000000000000000, 0.1000000000000000056, 0.005563326554963744037),
    (0.5999999999999999778, 0.5000000000000000000, 0.5000000000000000000, 0.5171052771181597031),
    (0.5999999999999999778, 0.5000000000000000000, 1.000000000000000000, 0.5069539820461164997),
    (0.5999999999999999778, 0.5000000000000000000, 2.000000000000000000, 0.3982210149680188267),
    (0.5999999999999999778, 0.5000000000000000000, 5.000000000000000000, 0.2595290024293987830),
    (0.5999999999999999778, 0.5000000000000000000, 50.00000000000000000, 0.08089666048946568706),
    (0.5999999999999999778, 0.9000000000000000222, 0.1000000000000000056, 0.0008834278153308075938),
    (0.5999999999999999778, 0.9000000000000000222, 0.5000000000000000000, 0.3246028562628660708),
    (0.5999999999999999778, 0.9000000000000000222, 1.000000000000000000, 0.5193006510773125071),
    (0.5999999999999999778, 0.9000000000000000222, 2.000000000000000000, 0.6278289713065504074),
    (0.5999999999999999778, 0.9000000000000000222, 5.000000000000000000, 0.6751211225247412753),
    (0.5999999999999999778, 0.9000000000000000222, 50.00000000000000000, 0.6104914147509071364),
    (0.6666666666666666297, -1.500000000000000000, 0.1000000000000000056, 0.06099281676625636131),
    (0.6666666666666666297, -1.500000000000000000, 0.5000000000000000000, -5.505391882685962657),
    (0.6666666666666666297, -1.500000000000000000, 1.000000000000000000, -0.1635408639465865527),
    (0.6666666666666666297, -1.500000000000000000, 2.000000000000000000, 0.05973284629952596846),
    (0.6666666666666666297, -1.500000000000000000, 5.000000000000000000, 0.008561378082769565770),
    (0.6666666666666666297, -1.500000000000000000, 50.00000000000000000, 0.00002535845895727141007),
    (0.6666666666666666297, -0.5000000000000000000, 0.1000000000000000056, 0.0002337731353749761967),
    (0.6666666666666666297, -0.5000000000000000000, 0.5000000000000000000, 0.6839888583181019035),
    (0.6666666666666666297, -0.5000000000000000000, 1.000000000000000000, -0.1407583718630936450),
    (0.6666666666666666297, -0.5000000000000000000, 2.000000000000000000, -0.1019462212867066375),
    (0.6666666666666666297, -0.5000000000000000000, 5.000000000000000000, -0.02838779699027068899),
    (0.6666666666666666297, -0.5000000000000000000, 50.00000000000000000, -0.0008314728666173260682),
    (0.6666666666666666297, 0.0, 0.1000000000000000056, 0.00001387172382926545097),
    (0.6666666666666666297, 0.0, 0.5000000000000000000, 0.8579353313319591779),
    (0.6666666666666666297, 0.0, 1.000000000000000000, 0.3505680759201115412),
    (0.6666666666666666297, 0.0, 2.000000000000000000, 0.1063542915216224225),
    (0.6666666666666666297, 0.0, 5.000000000000000000, 0.02071475125315641409),
    (0.6666666666666666297, 0.0, 50.00000000000000000, 0.0003845058127617019578),
    (0.6666666666666666297, 0.2999999999999999889, 0.1000000000000000056, 2.516657787129466086e-6),
    (0.6666666666666666297, 0.2999999999999999889, 0.5000000000000000000, 0.6674426700533955365),
    (0.6666666666666666297, 0.2999999999999999889, 1.000000000000000000, 0.5146075930410988887),
    (0.6666666666666666297, 0.2999999999999999889, 2.000000000000000000, 0.2967879186668548622),
    (0.6666666666666666297, 0.2999999999999999889, 5.000000000000000000, 0.1366502717034642739),
    (0.6666666666666666297, 0.2999999999999999889, 50.00000000000000000, 0.02285513387428109625),
    (0.6666666666666666297, 0.5000000000000000000, 0.1000000000000000056, 8.026414502998081947e-7),
    (0.6666666666666666297, 0.5000000000000000000, 0.5000000000000000000, 0.5250763884953518550),
    (0.6666666666666666297, 0.5000000000000000000, 1.000000000000000000, 0.5628820439977530622),
    (0.6666666666666666297, 0.5000000000000000000, 2.000000000000000000, 0.4302089613791789772),
    (0.6666666666666666297, 0.5000000000000000000, 5.000000000000000000, 0.2696410742032442392),
    (0.6666666666666666297, 0.5000000000000000000, 50.00000000000000000, 0.08126546057326459106),
    (0.6666666666666666297, 0.9000000000000000222, 0.1000000000000000056, 8.074175137073972162e-8),
    (0.6666666666666666297, 0.9000000000000000222, 0.5000000000000000000, 0.2887757362419035083),
    (0.6666666666666666297, 0.9000000000000000222, 1.000000000000000000, 0.5466288590845725139),
    (0.6666666666666666297, 0.9000000000000000222, 2.000000000000000000, 0.6702177395536772369),
    (0.6666666666666666297, 0.9000000000000000222, 5.000000000000000000, 0.7078944157693082224),
    (0.6666666666666666297, 0.9000000000000000222, 50.00000000000000000, 0.6195275003506885901),
    (0.7500000000000000000, -1.500000000000000000, 0.1000000000000000056, 3.897781687144272517e-39),
    (0.7500000000000000000, -1.500000000000000000, 0.5000000000000000000, -10.84125994743910083),
    (0.7500000000000000000, -1.500000000000000000, 1.000000000000000000, -0.3969961117238306960),
    (0.7500000000000000000, -1.500000000000000000, 2.000000000000000000, 0.09309563345728198115),
    (0.7500000000000000000, -1.500000000000000000, 5.000000000000000000, 0.01022784450567990999),
    (0.7500000000000000000, -1.500000000000000000, 50.00000000000000000, 0.00002565714018266233293),
    (0.7500000000000000000, -0.5000000000000000000, 0.1000000000000000056, 1.249689067054284730e-42),
    (0.7500000000000000000, -0.5000000000000000000, 0.5000000000000000000, 1.850086938327842408),
    (0.7500000000000000000, -0.5000000000000000000, 1.000000000000000000, -0.1889896914591196473),
    (0.7500000000000000000, -0.5000000000000000000, 2.000000000000000000, -0.1327451020159357742),
    (0.7500000000000000000, -0.5000000000000000000, 5.000000000000000000, -0.03153187133458347150),
    (0.7500000000000000000, -0.5000000000000000000, 50.00000000000000000, -0.0008361708496220243708),
    (0.7500000000000000000, 0.0, 0.1000000000000000056, 2.226941241431676653e-44),
    (0.7500000000000000000, 0.0, 0.5000000000000000000, 1.124709885945617585),
    (0.7500000000000000000, 0.0, 1.000000000000000000, 0.4549489076927069842),
    (0.7500000000000000000, 0.0, 2.000000000000000000, 0.1071899929358414641),
    (0.7500000000000000000, 0.0, 5.000000000000000000, 0.01665099158132848660),
    (0.7500000000000000000, 0.0, 50.00000000000000000, 0.0002322860925990561447),
    (0.7500000000000000000, 0.2999999999999999889, 0.1000000000000000056, 1.984240498136989792e-45),
    (0.7500000000000000000, 0.2999999999999999889, 0.5000000000000000000, 0.6859070939342347522),
    (0.7500000000000000000, 0.2999999999999999889, 1.000000000000000000, 0.6236637898788171456),
    (0.7500000000000000000, 0.2999999999999999889, 2.000000000000000000, 0.3231434226635788441),
    (0.7500000000000000000, 0.2999999999999999889, 5.000000000000000000, 0.1380508132547852019),
    (0.7500000000000000000, 0.2999999999999999889, 50.00000000000000000, 0.02259470156643297965),
    (0.7500000000000000000, 0.5000000000000000000, 0.1000000000000000056, 3.955902854158826016e-46),
    (0.7500000000000000000, 0.5000000000000000000, 0.5000000000000000000, 0.4699026240395725180),
    (0.7500000000000000000, 0.5000000000000000000, 1.000000000000000000, 0.6545278602610627401),
    (0.7500000000000000000, 0.5000000000000000000, 2.000000000000000000, 0.4711321722027631088),
    (0.7500000000000000000, 0.5000000000000000000, 5.000000000000000000, 0.2787038063909961850),
    (0.7500000000000000000, 0.5000000000000000000, 50.00000000000000000, 0.08132153984968211112),
    (0.7500000000000000000, 0.9000000000000000222, 0.1000000000000000056, 1.569996646714358120e-47),
    (0.7500000000000000000, 0.9000000000000000222, 0.5000000000000000000, 0.2023205429888835334),
    (0.7500000000000000000, 0.9000000000000000222, 1.000000000000000000, 0.5877112915216767050),
    (0.7500000000000000000, 0.9000000000000000222, 2.000000000000000000, 0.7278100532184127090),
    (0.7500000000000000000, 0.9000000000000000222, 5.000000000000000000, 0.7440946363809702998),
    (0.7500000000000000000, 0.9000000000000000222, 50.00000000000000000, 0.6267677660273485413),
    (0.8000000000000000444, -1.500000000000000000, 0.1000000000000000056, 0.0),
    (0.8000000000000000444, -1.500000000000000000, 0.5000000000000000000, -5.353122362465081489),
    (0.8000000000000000444, -1.500000000000000000, 1.000000000000000000, -0.6599792769010288170),
    (0.8000000000000000444, -1.500000000000000000, 2.000000000000000000, 0.1268349737024803414),
    (0.8000000000000000444, -1.500000000000000000, 5.000000000000000000, 0.01120321281143944701),
    (0.8000000000000000444, -1.500000000000000000, 50.00000000000000000, 0.00002568063265581103153),
    (0.8000000000000000444, -0.5000000000000000000, 0.1000000000000000056, 0.0),
    (0.8000000000000000444, -0.5000000000000000000, 0.5000000000000000000, 3.086267993776700405),
    (0.8000000000000000444, -0.5000000000000000000, 1.000000000000000000, -0.2496846342193131812),
    (0.8000000000000000444, -0.5000000000000000000, 2.000000000000000000, -0.1571505443553248294),
    (0.8000000000000000444, -0.5000000000000000000, 5.000000000000000000, -0.03311093902449218185),
    (0.8000000000000000444, -0.5000000000000000000, 50.00000000000000000, -0.0008356124835741941535),
    (0.8000000000000000444, 0.0, 0.1000000000000000056, 0.0),
    (0.8000000000000000444, 0.0, 0.5000000000000000000, 1.126437376338313921),
    (0.8000000000000000444, 0.0, 1.000000000000000000, 0.5456269594855448364),
    (0.8000000000000000444, 0.0, 2.000000000000000000, 0.1025818669116979817),
    (0.8000000000000000444, 0.0, 5.000000000000000000, 0.01361248988090366443),
    (0.8000000000000000444, 0.0, 50.00000000000000000, 0.0001609574310455122274),
    (0.8000000000000000444, 0.2999999999999999889, 0.1000000000000000056, 0.0),
    (0.8000000000000000444, 0.2999999999999999889, 0.5000000000000000000, 0.5507134314343281735),
    (0.8000000000000000444, 0.2999999999999999889, 1.000000000000000000, 0.7161381682981367274),
    (0.8000000000000000444, 0.2999999999999999889, 2.000000000000000000, 0.3368348898871605867),
    (0.8000000000000000444, 0.2999999999999999889, 5.000000000000000000, 0.1374709863523711961),
    (0.8000000000000000444, 0.2999999999999999889, 50.00000000000000000, 0.02243497840766595878),
    (0.8000000000000000444, 0.5000000000000000000, 0.1000000000000000056, 0.0),
    (0.8000000000000000444, 0.5000000000000000000, 0.5000000000000000000, 0.3308506112500730617),
    (0.8000000000000000444, 0.5000000000000000000, 1.000000000000000000, 0.7299082385767182318),
    (0.8000000000000000444, 0.5000000000000000000, 2.000000000000000000, 0.4956286425155692720),
    (0.8000000000000000444, 0.5000000000000000000, 5.000000000000000000, 0.2821646320013533216),
    (0.8000000000000000444, 0.5000000000000000000, 50.00000000000000000, 0.08123144339022510116),
    (0.8000000000000000444, 0.9000000000000000222, 0.1000000000000000056, 0.0),
    (0.8000000000000000444, 0.9000000000000000222, 0.5000000000000000000, 0.1122277942745843148),
    (0.8000000000000000444, 0.9000000000000000222, 1.000000000000000000, 0.6183818277403474285),
    (0.8000000000000000444, 0.9000000000000000222, 2.000000000000000000, 0.7652547712341429572),
    (0.8000000000000000444, 0.9000000000000000222, 5.000000000000000000, 0.7629779110974816263),
    (0.8000000000000000444, 0.9000000000000000222, 50.00000000000000000, 0.6295499824298544458),
    (0.9000000000000000222, -1.500000000000000000, 0.1000000000000000056, 0.0),
    (0.9000000000000000222, -1.500000000000000000, 0.5000000000000000000, 0.0005164263292724694043),
    (0.9000000000000000222, -1.500000000000000000, 1.000000000000000000, -2.167296129870311682),
    (0.9000000000000000222, -1.500000000000000000, 2.000000000000000000, 0.2470018692353013433),
    (0.9000000000000000222, -1.500000000000000000, 5.000000000000000000, 0.01275257231430497609),
    (0.9000000000000000222, -1.500000000000000000, 50.00000000000000000, 0.00002550437397227838556),
    (0.9000000000000000222, -0.5000000000000000000, 0.1000000000000000056, 0.0),
    (0.9000000000000000222, -0.5000000000000000000, 0.5000000000000000000, 1.537292928216417275e-6),
    (0.9000000000000000222, -0.5000000000000000000, 1.000000000000000000, -0.6741907078012259756),
    (0.9000000000000000222, -0.5000000000000000000, 2.000000000000000000, -0.2207213553207389626),
    (0.9000000000000000222, -0.5000000000000000000, 5.000000000000000000, -0.03514825053012142123),
    (0.9000000000000000222, -0.5000000000000000000, 50.00000000000000000, -0.0008302137302256476038),
    (0.9000000000000000222, 0.0, 0.1000000000000000056, 0.0),
    (0.9000000000000000222, 0.0, 0.5000000000000000000, 8.203967675351146289e-8),
    (0.9000000000000000222, 0.0, 1.000000000000000000, 0.9073320710591441064),
    (0.9000000000000000222, 0.0, 2.000000000000000000, 0.07341562785581468579),
    (0.9000000000000000222, 0.0, 5.000000000000000000, 0.006766817498943536408),
    (0.9000000000000000222, 0.0, 50.00000000000000000, 0.00005879644744609022074),
    (0.9000000000000000222, 0.2999999999999999889, 0.1000000000000000056, 0.0),
    (0.9000000000000000222, 0.2999999999999999889, 0.5000000000000000000, 1.404428570338018340e-8),
    (0.9000000000000000222, 0.2999999999999999889, 1.000000000000000000, 1.067603083875065549),
    (0.9000000000000000222, 0.2999999999999999889, 2.000000000000000000, 0.3530388358999052856),
    (0.9000000000000000222, 0.2999999999999999889, 5.000000000000000000, 0.1334688095002600400),
    (0.9000000000000000222, 0.2999999999999999889, 50.00000000000000000, 0.02214792258081852354),
    (0.9000000000000000222, 0.5000000000000000000, 0.1000000000000000056, 0.0),
    (0.9000000000000000222, 0.5000000000000000000, 0.5000000000000000000, 4.318378184949624060e-9),
    (0.9000000000000000222, 0.5000000000000000000, 1.000000000000000000, 0.9999877158508203889),
    (0.9000000000000000222, 0.5000000000000000000, 2.000000000000000000, 0.5405410126047798798),
    (0.9000000000000000222, 0.5000000000000000000, 5.000000000000000000, 0.2847154706191262897),
    (0.9000000000000000222, 0.5000000000000000000, 50.00000000000000000, 0.08093076185045269879),
    (0.9000000000000000222, 0.9000000000000000222, 0.1000000000000000056, 0.0),
    (0.9000000000000000222, 0.9000000000000000222, 0.5000000000000000000, 4.057425299841515551e-10),
    (0.9000000000000000222, 0.9000000000000000222, 1.000000000000000000, 0.7099380893513301223),
    (0.9000000000000000222, 0.9000000000000000222, 2.000000000000000000, 0.8473473146891388089),
    (0.9000000000000000222, 0.9000000000000000222, 5.000000000000000000, 0.7937258391717513938),
    (0.9000000000000000222, 0.9000000000000000222, 50.00000000000000000, 0.6327852086739537368),
];
/// (ν, μ ≥ 1, t, f_{ν,μ}(t))
pub const KERNEL_EXTENDED: &[(f64, f64, f64, f64)] = &[
    (0.4000000000000000222, 1.000000000000000000, 0.5000000000000000000, 0.3374386878171197238),
    (0.4000000000000000222, 1.000000000000000000, 1.000000000000000000, 0.4552199284076342080),
    (0.4000000000000000222, 1.000000000000000000, 2.000000000000000000, 0.5624817672379919073),
    (0.4000000000000000222, 1.300000000000000044, 0.5000000000000000000, 0.2511641470164337535),
    (0.4000000000000000222, 1.300000000000000044, 1.000000000000000000, 0.4354248301060761245),
    (0.4000000000000000222, 1.300000000000000044, 2.000000000000000000, 0.6854725107266220361),
    (0.4000000000000000222, 2.299999999999999822, 0.5000000000000000000, 0.06125018293273521478),
    (0.4000000000000000222, 2.299999999999999822, 1.000000000000000000, 0.2355922038057656545),
    (0.4000000000000000222, 2.299999999999999822, 2.000000000000000000, 0.8046390947393578448),
    (0.4000000000000000222, 3.000000000000000000, 0.5000000000000000000, 0.01741205712756963390),
    (0.4000000000000000222, 3.000000000000000000, 1.000000000000000000, 0.1148857069010800252),
    (0.4000000000000000222, 3.000000000000000000, 2.000000000000000000, 0.6648733900792035969),
    (0.5000000000000000000, 1.000000000000000000, 0.5000000000000000000, 0.3173105078629141028),
    (0.5000000000000000000, 1.000000000000000000, 1.000000000000000000, 0.4795001221869534623),
    (0.5000000000000000000, 1.000000000000000000, 2.000000000000000000, 0.6170750774519737927),
    (0.5000000000000000000, 1.300000000000000044, 0.5000000000000000000, 0.2201369263094364515),
    (0.5000000000000000000, 1.300000000000000044, 1.000000000000000000, 0.4402186344463639084),
    (0.5000000000000000000, 1.300000000000000044, 2.000000000000000000, 0.7361102305627811956),
    (0.5000000000000000000, 2.299999999999999822, 0.5000000000000000000, 0.04425478953927037064),
    (0.5000000000000000000, 2.299999999999999822, 1.000000000000000000, 0.2124079284051132419),
    (0.5000000000000000000, 2.299999999999999822, 2.000000000000000000, 0.8114427499285678176),
    (0.5000000000000000000, 3.000000000000000000, 0.5000000000000000000, 0.01122734934997586795),
    (0.5000000000000000000, 3.000000000000000000, 1.000000000000000000, 0.09670394526599765929),
    (0.5000000000000000000, 3.000000000000000000, 2.000000000000000000, 0.6447080502413721140),
    (0.5999999999999999778, 1.000000000000000000, 0.5000000000000000000, 0.2825337280725154124),
    (0.5999999999999999778, 1.000000000000000000, 1.000000000000000000, 0.5062601545266478766),
    (0.5999999999999999778, 1.000000000000000000, 2.000000000000000000, 0.6763479335438977704),
    (0.5999999999999999778, 1.300000000000000044, 0.5000000000000000000, 0.1785857913037822439),
    (0.5999999999999999778, 1.300000000000000044, 1.000000000000000000, 0.4436429136609750761),
    (0.5999999999999999778, 1.300000000000000044, 2.000000000000000000, 0.7912389178364047055),
    (0.5999999999999999778, 2.299999999999999822, 0.5000000000000000000, 0.02749359037269150105),
    (0.5999999999999999778, 2.299999999999999822, 1.000000000000000000, 0.1865048176916641426),
    (0.5999999999999999778, 2.299999999999999822, 2.000000000000000000, 0.8182656598322133274),
    (0.5999999999999999778, 3.000000000000000000, 0.5000000000000000000, 0.005923704541249534778),
    (0.5999999999999999778, 3.000000000000000000, 1.000000000000000000, 0.07784462826085693946),
    (0.5999999999999999778, 3.000000000000000000, 2.000000000000000000, 0.6227237010561216402),
];
/// (ν, μ, t, f) at t = 1e-3
pub const KERNEL_SMALL_T: &[(f64, f64, f64, f64)] = &[
    (0.4000000000000000222, 0.0, 0.001000000000000000021, 1.711988404762750915e-11),
    (0.4000000000000000222, 0.5000000000000000000, 0.001000000000000000021, 1.163946113776151029e-13),
    (0.5000000000000000000, 0.0, 0.001000000000000000021, 2.381083317073114503e-105),
    (0.5000000000000000000, 0.5000000000000000000, 0.001000000000000000021, 4.762166634146229105e-108),
    (0.5999999999999999778, 0.0, 0.001000000000000000021, 0.0),
    (0.5999999999999999778, 0.5000000000000000000, 0.001000000000000000021, 0.0),
];
