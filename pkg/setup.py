from setuptools import setup, find_packages

setup(
    name='tropfano',

    version='0.1.0',

    description='Exact computation of tropical Fano schemes.',
    long_description='A Python package for tropical Fano schemes of linear spaces and toric '
                     'varieties, tropicalized Fano schemes of planes and the realization of '
                     'tropical lines.',

    author='tropfano developers',

    license='BSD',

    classifiers=[
        'Development Status :: 3 - Alpha',
        'Intended Audience :: Science/Research',
        'License :: OSI Approved :: BSD License',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Mathematics',
    ],

    keywords='tropical geometry fano schemes matroids polyhedral complexes',

    packages=find_packages(exclude=['tests']),

    # run-time dependencies that will be installed by pip
    install_requires=['numpy', 'scipy', 'sympy', 'pycddlib<3'],

    entry_points={
        'console_scripts': ['tropfano = tropfano.cli:main'],
    },
)
