//! Frozen reference values, generated offline from 50-digit evaluations.
#![allow(dead_code)]

pub const J_REF: &[(i32, f64, f64)] = &[
    (0, 0.05, 0.9993750976494686),
    (0, 0.5, 0.9384698072408129),
    (0, 1.7, 0.3979848594461095),
    (0, 2.4048, 1.3268284301171568e-05),
    (0, 5.0, -0.1775967713143383),
    (0, 11.9, 0.025049441699589645),
    (0, 12.1, 0.06966677360680731),
    (0, 20.0, 0.16702466434058316),
    (0, 37.0, 0.010862369724899694),
    (0, 63.0, 0.08185768644780927),
    (0, 100.0, 0.019985850304223122),
    (1, 0.05, 0.0249921883137597),
    (1, 0.5, 0.2422684576748739),
    (1, 1.7, 0.5777652315290233),
    (1, 2.4048, 0.5191530145075532),
    (1, 5.0, -0.32757913759146523),
    (1, 11.9, -0.22898324966192404),
    (1, 12.1, -0.2157489733769248),
    (1, 20.0, 0.06683312417585005),
    (1, 37.0, -0.13058003873375645),
    (1, 63.0, -0.05769668029394361),
    (1, 100.0, -0.07714535201411216),
    (2, 0.05, 0.00031243490091938445),
    (2, 0.5, 0.03060402345868264),
    (2, 1.7, 0.28173894235274133),
    (2, 2.4048, 0.4317507158370838),
    (2, 5.0, 0.046565116277752214),
    (2, 11.9, -0.06353402147470293),
    (2, 12.1, -0.10532776094183621),
    (2, 20.0, -0.16034135192299814),
    (2, 37.0, -0.01792075019699464),
    (2, 63.0, -0.08368932709206145),
    (2, 100.0, -0.021528757344505364),
    (3, 0.05, 2.6037597910554327e-06),
    (3, 0.5, 0.002563729994587244),
    (3, 1.7, 0.08514992694801526),
    (3, 2.4048, 0.19899521542771592),
    (3, 5.0, 0.364831230613667),
    (3, 11.9, 0.2076272760569819),
    (3, 12.1, 0.18092987885069797),
    (3, 20.0, -0.09890139456044968),
    (3, 37.0, 0.12864266033408137),
    (3, 63.0, 0.05238307222460638),
    (3, 100.0, 0.07628420172033194),
    (5, 0.05, 8.137173160673097e-11),
    (5, 0.5, 8.053627241357474e-06),
    (5, 1.7, 0.003274598141067864),
    (5, 2.4048, 0.016388459340285967),
    (5, 5.0, 0.26114054612017007),
    (5, 11.9, -0.0945381715083847),
    (5, 12.1, -0.05197446976659682),
    (5, 20.0, 0.15116976798239498),
    (5, 37.0, -0.12025742311395987),
    (5, 63.0, -0.04112234954353304),
    (5, 100.0, -0.07419573696451393),
    (8, 0.05, 3.78415909163783e-18),
    (8, 0.5, 3.75822315479761e-10),
    (8, 1.7, 6.234840760587291e-06),
    (8, 2.4048, 9.215827081946431e-05),
    (8, 5.0, 0.018405216654802),
    (8, 11.9, 0.06506750553055861),
    (8, 12.1, 0.025039773504706937),
    (8, 20.0, -0.07386892884075034),
    (8, 37.0, 0.10803878960519721),
    (8, 63.0, 0.10031398360902684),
    (8, 100.0, 0.04334955988238646),
    (13, 0.05, 2.392877180897808e-31),
    (13, 0.5, 2.3823232712155037e-18),
    (13, 1.7, 1.8438020715444255e-11),
    (13, 2.4048, 1.5898325499055973e-09),
    (13, 5.0, 1.5207582205849454e-05),
    (13, 11.9, 0.11371515342303667),
    (13, 12.1, 0.12673480508226545),
    (13, 20.0, -0.2041450525484298),
    (13, 37.0, 0.09903675145839075),
    (13, 63.0, 0.06751507500079137),
    (13, 100.0, -0.03639367434062336),
    (21, 0.05, 4.4502451195249275e-54),
    (21, 0.5, 4.43774561105017e-33),
    (21, 1.7, 6.239944135902028e-22),
    (21, 2.4048, 8.792312523603536e-19),
    (21, 5.0, 3.343819986753189e-12),
    (21, 11.9, 6.771719017292906e-05),
    (21, 12.1, 9.058472455129758e-05),
    (21, 20.0, 0.11063364402897208),
    (21, 37.0, -0.14419338555235112),
    (21, 63.0, 0.023383634952880764),
    (21, 100.0, 0.06298090456383468),
    (34, 0.05, 1.1475931191285185e-93),
    (34, 0.5, 1.1455660799430411e-59),
    (34, 1.7, 1.3216340499573797e-41),
    (34, 2.4048, 1.7121835739918744e-36),
    (34, 5.0, 9.595100175802428e-26),
    (34, 11.9, 2.61646549958089e-13),
    (34, 12.1, 4.451229212009751e-13),
    (34, 20.0, 1.7132431380166401e-06),
    (34, 37.0, 0.2032597920872787),
    (34, 63.0, 0.08876061042016961),
    (34, 100.0, 0.015752770513722453),
    (55, 0.05, 6.067571724385459e-162),
    (55, 0.5, 6.060871235524634e-107),
    (55, 1.7, 1.0203669764742832e-77),
    (55, 2.4048, 1.939981898444301e-69),
    (55, 5.0, 5.4262753080931986e-52),
    (55, 11.9, 1.65444269052103e-31),
    (55, 12.1, 4.04902585439358e-31),
    (55, 20.0, 1.2826740781844533e-19),
    (55, 37.0, 5.876663433847765e-07),
    (55, 63.0, -0.0457138265968488),
    (55, 100.0, -0.08694802450243785),
    (64, 0.05, 2.316004941949967e-192),
    (64, 0.5, 2.313801316194194e-128),
    (64, 1.7, 2.3690083506072004e-94),
    (64, 2.4048, 1.023423965154158e-84),
    (64, 5.0, 2.103556084685751e-64),
    (64, 11.9, 1.690993757955724e-40),
    (64, 12.1, 4.8229638753621246e-40),
    (64, 20.0, 1.6611215152065e-26),
    (64, 37.0, 4.040016660224395e-11),
    (64, 63.0, 0.08681706850980302),
    (64, 100.0, 0.03998506945291834),
];
pub const JP_REF: &[(i32, f64, f64)] = &[
    (0, 0.5, -0.2422684576748739),
    (0, 2.4048, -0.5191530145075532),
    (0, 11.9, 0.22898324966192404),
    (0, 12.1, 0.2157489733769248),
    (0, 37.0, 0.13058003873375645),
    (0, 100.0, 0.07714535201411216),
    (1, 0.5, 0.4539328918910651),
    (1, 2.4048, -0.2158687237763913),
    (1, 11.9, 0.04429173158714629),
    (1, 12.1, 0.08749726727432176),
    (1, 37.0, 0.014391559960947167),
    (1, 100.0, 0.020757303824364245),
    (3, 0.5, 0.015221643491159178),
    (3, 2.4048, 0.18350319160091122),
    (3, 11.9, -0.11587703224537063),
    (3, 12.1, -0.1501864085907696),
    (3, 37.0, -0.02835123617002826),
    (3, 100.0, -0.023817283396115323),
    (8, 0.5, 6.002710280086847e-09),
    (8, 2.4048, 0.0002940649611722246),
    (8, 11.9, -0.19894978308666944),
    (8, 12.1, -0.20061298063468808),
    (8, 37.0, 0.07377863777551354),
    (8, 100.0, 0.06670472619662181),
    (21, 0.5, 1.863348805063643e-31),
    (21, 2.4048, 7.629725579533985e-18),
    (21, 11.9, 9.969932473240088e-05),
    (21, 12.1, 0.00013019910580931178),
    (21, 37.0, -0.005057804071694366),
    (21, 100.0, 0.04899146853993347),
    (64, 0.5, 2.961576691073707e-126),
    (64, 2.4048, 2.7217893920037133e-83),
    (64, 11.9, 8.938330662684634e-40),
    (64, 12.1, 2.5057089089957593e-39),
    (64, 37.0, 5.728550594484145e-11),
    (64, 100.0, -0.06317286687104219),
];
pub const Y_REF: &[(i32, f64, f64)] = &[
    (0, 0.1, -1.5342386513503667),
    (0, 0.9, 0.005628306635205559),
    (0, 3.3, 0.26909199505453385),
    (0, 11.9, -0.22983321394337505),
    (0, 12.1, -0.2184383805509255),
    (0, 26.0, 0.012044625860755602),
    (0, 100.0, -0.07724431336508315),
    (1, 0.1, -6.4589510947020266),
    (1, 0.9, -0.8731265824563288),
    (1, 3.3, 0.3878529310237099),
    (1, 11.9, -0.03471149833403061),
    (1, 12.1, -0.07873693145139575),
    (1, 26.0, -0.15579655322960265),
    (1, 100.0, -0.020372312002759792),
    (2, 0.1, -127.64478324269015),
    (2, 0.9, -1.945909600982603),
    (2, 3.3, -0.03402961261592178),
    (2, 11.9, 0.22399934867715143),
    (2, 12.1, 0.20542401171598404),
    (2, 26.0, -0.024028976109186577),
    (2, 100.0, 0.07683686712502795),
    (5, 0.1, -24461484.50230391),
    (5, 0.9, -435.689770896579),
    (5, 3.3, -1.379757056447809),
    (5, 11.9, -0.2233058626638331),
    (5, 12.1, -0.23438595207648688),
    (5, 26.0, -0.13390627164020222),
    (5, 100.0, -0.029480196281661895),
    (13, 0.1, -1.2493022262718506e+25),
    (13, 0.9, -4997568618341.652),
    (13, 3.3, -285413.6438762317),
    (13, 11.9, -0.4986265920182265),
    (13, 12.1, -0.4622996906484254),
    (13, 26.0, 0.16263400160715244),
    (13, 100.0, -0.07138693152907484),
    (40, 0.1, -7.139418990418096e+97),
    (40, 0.9, -4.855006299897045e+59),
    (40, 3.3, -1.3913053283582821e+37),
    (40, 11.9, -1701612579671401.5),
    (40, 12.1, -901631717103885.5),
    (40, 26.0, -1844.9755985738439),
    (40, 100.0, 0.040746852168803444),
    (64, 0.1, -1.1641903821139649e+170),
    (64, 0.9, -9.905631136019312e+108),
    (64, 3.3, -7.941250461387338e+72),
    (64, 11.9, -2.993439109674818e+37),
    (64, 12.1, -1.0501763754679816e+37),
    (64, 26.0, -5.00660350656031e+16),
    (64, 100.0, 0.08176274673907619),
];
pub const I_REF: &[(i32, f64, f64)] = &[
    (0, 0.001, 1.0000002500000156),
    (0, 0.3, 1.022626879351597),
    (0, 1.0, 1.2660658777520084),
    (0, 1.9, 2.127740194053888),
    (0, 2.1, 2.4462831294361824),
    (0, 8.5, 683.1619269901156),
    (0, 30.0, 781672297823.9775),
    (0, 100.0, 1.0737517071310738e+42),
    (0, 250.0, 9.45753855984955e+106),
    (1, 0.001, 0.0005000000625000026),
    (1, 0.3, 0.15169384000359276),
    (1, 1.0, 0.565159103992485),
    (1, 1.9, 1.4482443730548888),
    (1, 2.1, 1.7454998088361062),
    (1, 8.5, 641.6199025400667),
    (1, 30.0, 768532038938.957),
    (1, 100.0, 1.0683693903381625e+42),
    (1, 250.0, 9.43860449151557e+106),
    (2, 0.001, 1.25000010416667e-07),
    (2, 0.3, 0.011334612660978455),
    (2, 1.0, 0.13574766976703828),
    (2, 1.9, 0.6032724329434783),
    (2, 2.1, 0.7839023591160813),
    (2, 8.5, 532.1925381571588),
    (2, 30.0, 730436828561.3804),
    (2, 100.0, 1.0523843193243106e+42),
    (2, 250.0, 9.382029723917425e+106),
    (5, 0.001, 2.6041667751736133e-19),
    (5, 0.3, 6.351893642780316e-07),
    (5, 1.0, 0.0002714631559569719),
    (5, 1.9, 0.0074830233459704555),
    (5, 2.1, 0.01275117866321948),
    (5, 8.5, 150.17112961585124),
    (5, 30.0, 512151465476.935),
    (5, 100.0, 9.47009387303558e+41),
    (5, 250.0, 8.99540062663577e+106),
    (13, 0.001, 1.960332534617952e-53),
    (13, 0.3, 3.1304299301878154e-21),
    (13, 1.0, 1.9956316782072008e-14),
    (13, 1.9, 8.79150439783438e-11),
    (13, 2.1, 3.2756091016839254e-10),
    (13, 8.5, 0.08189663397058214),
    (13, 30.0, 46624038082.740364),
    (13, 100.0, 4.598327941787467e+41),
    (13, 250.0, 6.7410131332911465e+106),
    (40, 0.001, 1.1146925740846781e-180),
    (40, 0.3, 1.3559498420937317e-81),
    (40, 1.0, 1.121509741331486e-60),
    (40, 1.9, 1.6101132163040813e-49),
    (40, 2.1, 8.863422339919848e-48),
    (40, 8.5, 2.5956734145239178e-23),
    (40, 30.0, 24.055697639533882),
    (40, 100.0, 3.8417054996804275e+38),
    (40, 250.0, 3.8567529936317503e+105),
    (64, 0.001, 4.272316139959955e-301),
    (64, 0.3, 1.4674861615918782e-142),
    (64, 1.0, 4.288779268545882e-109),
    (64, 1.9, 2.998632328828243e-91),
    (64, 2.1, 1.8199673609372864e-88),
    (64, 8.5, 1.713585242813239e-49),
    (64, 30.0, 4.2934827245697255e-13),
    (64, 100.0, 2.3488669016640613e+33),
    (64, 250.0, 2.6926255616192028e+103),
];
pub const K_REF: &[(i32, f64, f64)] = &[
    (0, 0.001, 7.023688800562382),
    (0, 0.3, 1.3724600605442974),
    (0, 1.0, 0.42102443824070834),
    (0, 1.9, 0.1288459792760475),
    (0, 2.1, 0.10078374088996693),
    (0, 8.5, 8.625756634932507e-05),
    (0, 30.0, 2.1324774964630563e-14),
    (0, 100.0, 4.656628229175902e-45),
    (0, 250.0, 2.1147193716964606e-110),
    (1, 0.001, 999.9962381560856),
    (1, 0.3, 3.055992033457325),
    (1, 1.0, 0.6019072301972346),
    (1, 1.9, 0.15966015303266762),
    (1, 2.1, 0.12274641153350789),
    (1, 8.5, 9.119724775006898e-05),
    (1, 30.0, 2.1677320018915495e-14),
    (1, 100.0, 4.6798537356369095e-45),
    (1, 250.0, 2.118944597814e-110),
    (2, 0.001, 1999999.5000009716),
    (2, 0.3, 21.745740283593133),
    (2, 1.0, 1.6248388986351774),
    (2, 1.9, 0.2969092982578029),
    (2, 2.1, 0.2176850852075935),
    (2, 8.5, 0.00010771574229051778),
    (2, 30.0, 2.2769929632558262e-14),
    (2, 100.0, 4.75022530388864e-45),
    (2, 250.0, 2.1316709284789726e-110),
    (5, 0.001, 3.8399997600000096e+17),
    (5, 0.3, 157139.1233712167),
    (5, 1.0, 360.9605896012407),
    (5, 1.9, 12.468991254156078),
    (5, 2.1, 7.21574601758268),
    (5, 8.5, 0.00033753056453034413),
    (5, 30.0, 3.210333510589026e-14),
    (5, 100.0, 5.2732561132929497e-45),
    (5, 250.0, 2.222918345804481e-110),
    (13, 0.001, 1.9619905127251968e+51),
    (13, 0.3, 1.2283054191853525e+19),
    (13, 1.0, 1921576392792.9941),
    (13, 1.9, 432860634.4444775),
    (13, 2.1, 115907063.30411054),
    (13, 8.5, 0.39291827684627495),
    (13, 30.0, 3.2800477341937896e-13),
    (13, 100.0, 1.0782904376032775e-44),
    (13, 250.0, 2.962915739086648e-110),
    (40, 0.001, 1.1213854193256461e+178),
    (40, 0.3, 9.218370653897153e+78),
    (40, 1.0, 1.1142206511787828e+58),
    (40, 1.9, 7.754680468529412e+46),
    (40, 2.1, 1.408349712474107e+45),
    (40, 8.5, 4.71046784900737e+20),
    (40, 30.0, 0.00041568547695014404),
    (40, 100.0, 1.2084207999827006e-41),
    (40, 250.0, 5.120588623491075e-109),
    (64, 0.001, 1.8286334023772224e+298),
    (64, 0.3, 5.323671428215146e+139),
    (64, 1.0, 1.8213915378875009e+106),
    (64, 1.9, 2.604206790118394e+88),
    (64, 2.1, 4.290349834839897e+85),
    (64, 8.5, 4.519459801513945e+46),
    (64, 30.0, 16475666922.554188),
    (64, 100.0, 1.7929261971143023e-36),
    (64, 250.0, 7.195657730501669e-107),
];
pub const H1_IMAG_REF: &[(i32, f64, f64, f64)] = &[
    (0, 0.4, 0.0, -0.7095312839179828),
    (0, 1.0, 0.0, -0.26803248203398855),
    (0, 3.0, 0.0, -0.02211585537455569),
    (0, 12.0, 0.0, -1.4010889634572334e-06),
    (1, 0.4, -1.3906032166434423, 0.0),
    (1, 1.0, -0.38318604387456484, 0.0),
    (1, 3.0, -0.02556437804392544, 0.0),
    (1, 12.0, -1.4583414957694248e-06, 0.0),
    (2, 0.4, 0.0, 7.662547367135194),
    (2, 1.0, 0.0, 1.0344045697831183),
    (2, 3.0, 0.0, 0.03915877407050598),
    (2, 12.0, 0.0, 1.6441458794188042e-06),
    (5, 0.4, -23636.090090629314, 9.241924449457139e-56),
    (5, 1.0, -229.7946483856098, 1.2744735289059618e-57),
    (5, 3.0, -0.5970052172838165, 0.0),
    (5, 12.0, -3.771284082602349e-06, 0.0),
];
pub const J3_AT_1P7: f64 = 0.08514992694801526;
pub const J3P_AT_1P7: f64 = 0.1314743653856556;
pub const J0_FIRST_ZERO: f64 = 2.404825557695773;
